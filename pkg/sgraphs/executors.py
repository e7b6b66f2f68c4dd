# -*- coding: utf-8 -*-
# Copyright (c) 2026 The sgraphs authors
# This code is distributed under the 2-clause BSD License.

"""Run independent chunks of a sweep, serially or on a process pool.

Results always come back in task order, so that callers can merge them
deterministically whatever the number of workers.
"""

import logging
import multiprocessing
import os

logger = logging.getLogger(__name__)


class Task(object):
    """A unit of work.

    Attributes:
        key (str): human-readable label, for logs
        func (callable): module-level function (must be picklable)
        args (tuple): positional arguments for func
    """
    __slots__ = ('key', 'func', 'args')

    def __init__(self, key, func, args=()):
        self.key = key
        self.func = func
        self.args = tuple(args)

    def run(self):
        logger.debug("Task %s: starting", self.key)
        return self.func(*self.args)

    def __repr__(self):
        return 'Task(%r, %s)' % (self.key, getattr(self.func, '__name__', self.func))


def _run_task(task):
    return task.run()


class BaseExecutor(object):

    jobs = 1

    def setup(self):
        """Extension point; called before the first task runs."""
        pass

    def cleanup(self):
        """Extension point; called once all tasks are done, or on error."""
        pass

    def map_tasks(self, tasks):
        """Run tasks; return their results, in task order."""
        raise NotImplementedError()

    def __enter__(self):
        self.setup()
        return self

    def __exit__(self, exc_type, exc_value, tb):
        self.cleanup()
        return False


class SerialExecutor(BaseExecutor):
    """Runs every task in the calling process."""

    def map_tasks(self, tasks):
        return [task.run() for task in tasks]


class PoolExecutor(BaseExecutor):
    """Runs tasks on a multiprocessing pool of `jobs` workers."""

    def __init__(self, jobs=1, **kwargs):
        super(PoolExecutor, self).__init__(**kwargs)
        self.jobs = jobs
        self.pool = None

    def setup(self):
        """Setup: start the worker processes."""
        super(PoolExecutor, self).setup()
        logger.info("Starting %d sweep workers", self.jobs)
        self.pool = multiprocessing.Pool(self.jobs)

    def map_tasks(self, tasks):
        tasks = list(tasks)
        if self.pool is None:
            # Used outside a `with` block.
            with self:
                return self.pool.map(_run_task, tasks, chunksize=1)
        return self.pool.map(_run_task, tasks, chunksize=1)

    def cleanup(self):
        """Cleanup: stop the workers and wait for them."""
        if self.pool is not None:
            self.pool.close()
            self.pool.join()
            self.pool = None
        super(PoolExecutor, self).cleanup()


def resolve_jobs(threads):
    """Turn a --threads value ('auto' or an integer) into a job count."""
    if threads in (None, '', 'auto'):
        return os.cpu_count() or 1
    jobs = int(threads)
    if jobs < 1:
        raise ValueError("threads must be positive, got %d" % jobs)
    return jobs


def make_executor(threads=1):
    jobs = resolve_jobs(threads)
    if jobs == 1:
        return SerialExecutor()
    return PoolExecutor(jobs=jobs)


def split_range(count, parts):
    """Split range(count) into at most `parts` contiguous (start, stop) pairs."""
    parts = max(1, min(parts, count))
    bounds = [count * i // parts for i in range(parts + 1)]
    return [(bounds[i], bounds[i + 1]) for i in range(parts) if bounds[i] < bounds[i + 1]]
