# -*- coding: utf-8 -*-
# Copyright (c) 2026 The sgraphs authors
# This code is distributed under the 2-clause BSD License.

import csv
from fractions import Fraction
import io
import json
import logging
import logging.handlers
import os
import sys

import networkx as nx

from . import __version__
from . import analysis
from . import executors
from . import spectral
from . import specs
from .charsum import DEFAULT_MQ_MAX_ORDER, format_decimal
from .config import Arg, Command, Group, UnifiedParser
from .errors import ConfigError, InvalidSpec, SGraphError
from .gf import DEFAULT_MAX_ORDER, field_of_order, make_field
from .graphs import (
    DEFAULT_VERTEX_CAP, LINES, POINTS, SIDE_NAMES, Graph, build_bipartite, build_s_graph,
    components, distance_two, export_edges, make_spec,
)
from .records import SKIPPED

logger = logging.getLogger(__name__)


WORK_CAP_ENV = 'SKQ_WORK_CAP'

VERIFY_CHOICES = [
    'thm3', 'thm4', 'thm52', 'lemma51', 'lemma61', 'remark1', 'remark2', 'remark3', 'remark4',
    'cheeger', 'cover', 'connectivity', 'oracle', 'distance-two',
]
EXPORT_CHOICES = ['edges', 'connection-set', 'bipartite', 'distance-two']

SPECTRUM_CSV_COLUMNS = ['value', 'multiplicity', 'coeffs', 'witness_w']
FAMILY_CSV_COLUMNS = [
    'q', 'lambda2', 'gap', 'ratio', 'cheeger_lower', 'bound', 'components',
    'condition1', 'dg_lt_p', 'verdict',
]


def _int_list(text):
    return [int(part) for part in text.split(',') if part.strip()]


class RunConfig(object):
    """Run-wide settings, validated.

    Attributes:
        work_cap (int): max elementary character evaluations per sweep
        vertex_cap (int): max vertices of a realised graph
        mq_cap (int): max field order for M_q
        sample (int): characters drawn when a sweep cannot be exhaustive
        seed (int): sampling seed
        threads (int or 'auto'): sweep workers
        output (str or None): output path; stdout when None
        format (str): json, csv or edgelist
    """

    __slots__ = ('work_cap', 'vertex_cap', 'mq_cap', 'sample', 'seed', 'threads', 'output', 'format')

    def __init__(self, work_cap=spectral.DEFAULT_WORK_CAP, vertex_cap=DEFAULT_VERTEX_CAP,
            mq_cap=DEFAULT_MQ_MAX_ORDER, sample=spectral.DEFAULT_SAMPLE, seed=0, threads=1,
            output=None, format='json'):  # pylint: disable=W0622
        for name, value in (('work_cap', work_cap), ('vertex_cap', vertex_cap), ('mq_cap', mq_cap),
                ('sample', sample)):
            if value < 1:
                raise ConfigError("%s must be positive, got %d" % (name, value))
        if threads != 'auto':
            try:
                threads = int(threads)
            except (TypeError, ValueError):
                raise ConfigError("threads must be an integer or 'auto', got %r" % (threads,))
            if threads < 1:
                raise ConfigError("threads must be positive, got %d" % threads)
        if format not in ('json', 'csv', 'edgelist'):
            raise ConfigError("unknown output format %r" % (format,))
        self.work_cap = work_cap
        self.vertex_cap = vertex_cap
        self.mq_cap = mq_cap
        self.sample = sample
        self.seed = seed
        self.threads = threads
        self.output = output or None
        self.format = format

    @classmethod
    def from_args(cls, args):
        return cls(**{name: getattr(args, name) for name in cls.__slots__})

    @property
    def sweep_kwargs(self):
        return {'work_cap': self.work_cap, 'sample': self.sample, 'seed': self.seed}

    def __repr__(self):
        return 'RunConfig(%s)' % ', '.join('%s=%r' % (name, getattr(self, name)) for name in self.__slots__)


def work_cap_default(environ=None):
    """The built-in work cap, or SKQ_WORK_CAP when set."""
    environ = os.environ if environ is None else environ
    value = environ.get(WORK_CAP_ENV)
    if not value:
        return spectral.DEFAULT_WORK_CAP
    try:
        return int(value)
    except ValueError:
        raise ConfigError("%s must be an integer, got %r" % (WORK_CAP_ENV, value))


SPEC_ARGS = [
    Arg('--p', type=int, help="Characteristic of F_q"),
    Arg('--e', type=int, default=1, help="Extension degree, q = p^e"),
    Arg('--k', type=int, help="Dimension of S(k,q)"),
    Arg('--f', help="f_3..f_k as JSON coefficient lists, e.g [[0,0,1]]"),
    Arg('--g', help="g_3..g_k as JSON coefficient lists, e.g [[0,0,0,1]]"),
    Arg('--spec-file', help="Read p, e, k, f, g from a JSON file"),
]


class Setup(object):
    description = "Exact spectra and theorem checks for the Cayley graphs S(k,q) over finite fields."
    options = [
        Group('', "", [
            Arg('--traceback', help="Include full stack trace on exception", action='store_true'),
        ]),

        Group('caps', "Size caps", [
            Arg('--work-cap', type=int, default=spectral.DEFAULT_WORK_CAP,
                help="Max elementary character evaluations per sweep (env %s)" % WORK_CAP_ENV),
            Arg('--vertex-cap', type=int, default=DEFAULT_VERTEX_CAP,
                help="Max vertices of a realised graph"),
            Arg('--mq-cap', type=int, default=DEFAULT_MQ_MAX_ORDER, help="Max field order for M_q"),
            Arg('--field-cap', type=int, default=DEFAULT_MAX_ORDER, help="Max field order"),
            Arg('--sample', type=int, default=spectral.DEFAULT_SAMPLE,
                help="Characters drawn when q^k exceeds the exhaustive limit"),
            Arg('--seed', type=int, default=0, help="Seed for sampled sweeps"),
        ], prefixed=False),

        Group('run', "Running", [
            Arg('--threads', default='1', help="Sweep workers: an integer, or 'auto'"),
            Arg('--output', help="Write data to OUTPUT instead of stdout"),
            Arg('--format', choices=['json', 'csv', 'edgelist'], default='json',
                help="Output format; CSV columns: spectrum %s, family %s" % (
                    ','.join(SPECTRUM_CSV_COLUMNS), ','.join(FAMILY_CSV_COLUMNS))),
        ], prefixed=False),

        Group('logging', "Logging", [
            Arg('--target', help="Logging target", choices=['null', 'file', 'stderr', 'syslog'],
                default='stderr'),
            Arg('--file', help="For 'file' target, write logs to FILE"),
            Arg('--level', help="Logging level", choices=['debug', 'info', 'warning', 'error'],
                default='warning'),
        ]),
    ]

    commands = [
        Command('spectrum', "Complete spectrum of S(k,q) from the character sums", SPEC_ARGS),
        Command('verify', "Check a lemma, theorem or remark; exit 0 iff every claim holds", [
            Arg('which', choices=VERIFY_CHOICES, help="The claim to check"),
            Arg('--q', type=_int_list, help="Field order(s), comma-separated"),
            Arg('--k', type=int, help="Dimension"),
            Arg('--n', type=int, default=1, help="Remark 2: g_i = X^(2n+1)"),
            Arg('--qmax', type=int, default=49, help="Remark 3: scan q up to QMAX"),
            Arg('--extra', type=_int_list, default=[], help="Remark 3: further q to scan, e.g 125"),
            Arg('--spec-p', type=int, help="Characteristic, for spec-based checks"),
            Arg('--spec-e', type=int, default=1, help="Extension degree, for spec-based checks"),
            Arg('--f', help="f_3..f_k as JSON coefficient lists"),
            Arg('--g', help="g_3..g_k as JSON coefficient lists"),
            Arg('--spec-file', help="Read the spec from a JSON file"),
            Arg('--bipartite', choices=sorted(specs.BIPARTITE_FAMILIES), default='wenger',
                help="distance-two: bipartite family"),
        ]),
        Command('family', "lambda_2 / q^2 trend of a templated family over several q", [
            Arg('--f-template', required=True, help="Comma-separated f templates, e.g 'X^2, X^3'"),
            Arg('--g-template', required=True, help="Comma-separated g templates, e.g 'X^3, X^3'"),
            Arg('--qs', type=_int_list, required=True, help="Field orders, e.g 5,11,17"),
        ]),
        Command('export', "Write edges, connection sets or bipartite graphs", SPEC_ARGS + [
            Arg('what', choices=EXPORT_CHOICES, help="The artifact"),
            Arg('--bipartite', choices=sorted(specs.BIPARTITE_FAMILIES), default='wenger',
                help="Bipartite family for 'bipartite' and 'distance-two'"),
            Arg('--side', choices=sorted(SIDE_NAMES),
                help="distance-two side; defaults to the side matching S(k+1,q)"),
        ]),
    ]

    def __init__(self, stdout=None, stderr=None, environ=None):
        self.stdout = stdout or sys.stdout
        self.stderr = stderr or sys.stderr
        self.environ = os.environ if environ is None else environ

    def error(self, message, code=1):
        self.stderr.write("Error: %s\n" % message)
        sys.exit(code)

    def setup_logging(self, args):
        if args.logging_target == 'syslog':
            handler = logging.handlers.SysLogHandler()
        elif args.logging_target == 'stderr':
            handler = logging.StreamHandler(self.stderr)
        elif args.logging_target == 'file':
            if not args.logging_file:
                self.error("--logging-file is required for --logging-target=file", 2)
            handler = logging.FileHandler(args.logging_file)
        else:
            handler = logging.NullHandler()

        formatter = logging.Formatter("%(levelname)s %(name)s: %(message)s")
        handler.setFormatter(formatter)

        level_map = {
            'debug': logging.DEBUG,
            'info': logging.INFO,
            'warning': logging.WARNING,
            'error': logging.ERROR,
        }
        root_logger = logging.getLogger()
        root_logger.setLevel(level_map[args.logging_level])
        root_logger.addHandler(handler)
        return handler

    # Helpers
    # -------

    def write(self, config, data):
        """Write data (bytes or str) to --output, or stdout."""
        if isinstance(data, bytes):
            data = data.decode('utf-8')
        if config.output:
            with io.open(config.output, 'w', encoding='utf-8', newline='\n') as f:
                f.write(data)
        else:
            self.stdout.write(data)

    def report(self, config, line):
        """Summary lines: stdout when data goes to a file, stderr otherwise."""
        stream = self.stdout if config.output else self.stderr
        stream.write(line + '\n')

    def _json(self, payload):
        return json.dumps(payload, sort_keys=True, indent=2) + '\n'

    def _csv(self, columns, rows):
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator='\n')
        writer.writerow(columns)
        for row in rows:
            writer.writerow([row.get(column, '') for column in columns])
        return buf.getvalue()

    def make_spec(self, args, p_attr='p', e_attr='e', field_cap=DEFAULT_MAX_ORDER):
        if args.spec_file:
            return specs.read_spec_file(args.spec_file, max_order=field_cap)
        p = getattr(args, p_attr)
        if p is None and args.f is None and args.g is None:
            return None
        if p is None or args.f is None or args.g is None:
            raise InvalidSpec("a spec needs --%s, --f and --g (or --spec-file)" % p_attr.replace('_', '-'))
        fs = specs.parse_poly_list(args.f, 'f')
        gs = specs.parse_poly_list(args.g, 'g')
        k = getattr(args, 'k', None) or len(fs) + 2
        return specs.spec_from_values(p, getattr(args, e_attr), k, fs, gs, max_order=field_cap)

    # Commands
    # --------

    def cmd_spectrum(self, args, config, executor):
        spec = self.make_spec(args, field_cap=args.field_cap)
        if spec is None:
            raise InvalidSpec("spectrum needs --p, --k, --f and --g, or --spec-file")
        spectrum = spectral.spectrum_formula(spec, executor=executor, **config.sweep_kwargs)
        lambda2 = spectral.second_eigenvalue(spectrum)

        if config.format == 'csv':
            rows = [{
                'value': format_decimal(entry.numeric),
                'multiplicity': entry.multiplicity,
                'coeffs': ' '.join(str(c) for c in entry.value.coeffs),
                'witness_w': ' '.join(str(c) for c in entry.witness_w),
            } for entry in spectrum.entries]
            self.write(config, self._csv(SPECTRUM_CSV_COLUMNS, rows))
        else:
            self.write(config, self._json(spectrum.as_dict()))

        q = spec.q
        self.report(config, "lambda_max = %s" % format_decimal(spectrum.top.numeric))
        self.report(config, "lambda_2 = %s" % format_decimal(lambda2.numeric))
        self.report(config, "gap = %s" % format_decimal(lambda2.gap))
        self.report(config, "components = %d" % spectrum.components)
        self.report(config, "lambda_min = %s (%s -q = %d)" % (
            format_decimal(spectrum.bottom.numeric),
            '<' if spectral.nonbipartite_witness(spectrum) else '>=', -q))
        if not spectrum.exhaustive:
            self.report(config, "sampled sweep: lambda_2 is a lower bound")
        return 0

    def _verify(self, args, config, executor):
        which = args.which
        kwargs = {'work_cap': config.work_cap, 'executor': executor}
        spec = self.make_spec(args, p_attr='spec_p', e_attr='spec_e', field_cap=args.field_cap)

        def need(name):
            value = getattr(args, name)
            if value is None:
                raise InvalidSpec("verify %s needs --%s" % (which, name))
            return value

        if which == 'thm3':
            return [analysis.verify_theorem3(q, need('k'), mq_cap=config.mq_cap, **dict(kwargs,
                sample=config.sample, seed=config.seed)) for q in need('q')]
        if which == 'thm4':
            return [analysis.verify_theorem4(q, need('k'), mq_cap=config.mq_cap, **dict(kwargs,
                sample=config.sample, seed=config.seed)) for q in need('q')]
        if which == 'remark1':
            return [analysis.remark1_witness(q, args.k or 3, **kwargs) for q in args.q or [5, 7, 11, 13]]
        if which == 'remark2':
            return [analysis.remark2_bound(q, need('k'), args.n, **kwargs) for q in need('q')]
        if which == 'remark3':
            return analysis.mq_scan(args.qmax, mq_cap=config.mq_cap, extra=args.extra, executor=executor)
        if which == 'remark4':
            q = (args.q or [5])[0]
            k = args.k or 4
            field = field_of_order(q, max_order=args.field_cap)
            return [analysis.cover_check(analysis.theorem3_spec(field, k), analysis.theorem3_spec(field, k + 1),
                mq_cap=config.mq_cap, **kwargs)]
        if which == 'cover':
            if spec is None:
                field = make_field(5)
                spec = analysis.remark1_spec(field, 4)
            return [analysis.cover_check(spec.truncate(spec.k - 1), spec, mq_cap=config.mq_cap, **kwargs)]
        if which == 'lemma51':
            targets = [spec] if spec else [
                analysis.remark1_spec(make_field(5), 3),
                make_spec(make_field(7), [[0, 0, 1]], [[0, 1, 0, 1]]),
            ]
            return [analysis.lemma51_sweep(s, **kwargs) for s in targets]
        if which == 'lemma61':
            if spec is None:
                spec = analysis.remark1_spec(make_field(5), 4)
            return [analysis.classify_cubic(spec, mq_cap=config.mq_cap, **kwargs)]
        if which == 'thm52':
            if spec is None:
                raise InvalidSpec("verify thm52 needs a spec")
            return [analysis.theorem52_bound(spec, sample=config.sample, seed=config.seed, **kwargs)]
        if which == 'connectivity':
            if spec is None:
                raise InvalidSpec("verify connectivity needs a spec")
            return [analysis.connectivity_check(spec, vertex_cap=config.vertex_cap, **kwargs)]
        if which == 'oracle':
            if spec is None:
                raise InvalidSpec("verify oracle needs a spec")
            return [analysis.oracle_check(spec, vertex_cap=config.vertex_cap, **kwargs)]
        if which == 'distance-two':
            q = (args.q or [3])[0]
            field = field_of_order(q, max_order=args.field_cap)
            bip = specs.bipartite_spec(args.bipartite, field, args.k or 2)
            g = build_bipartite(bip, vertex_cap=config.vertex_cap)
            side = bip.cayley_side if bip.cayley_side is not None else LINES
            return [analysis.distance_two_correspondence(g, side)]
        if which == 'cheeger':
            return self._cheeger_suite(spec, config)
        raise InvalidSpec("unknown claim %r" % which)

    def _cheeger_suite(self, spec, config):
        if spec is None:
            spec = make_spec(make_field(2), [[0, 1]], [[0, 1]])
            graphs = []
            for n in (6, 8, 10):
                graphs.append(('cycle(%d)' % n, Graph.from_networkx(nx.cycle_graph(n)), Fraction(2, n // 2)))
            graphs.append(('K4', Graph.from_networkx(nx.complete_graph(4)), Fraction(2)))
        else:
            graphs = []
        g = build_s_graph(spec, vertex_cap=config.vertex_cap).graph()
        found = components(g)
        for label in range(found.count):
            part = g.subgraph(found.members(label))
            expected = Fraction(2, part.n // 2) if part.regular_degree == 2 else None
            graphs.insert(label, ('%r component %d' % (spec, label), part, expected))
        return [analysis.cheeger_check(part, claim, expected) for claim, part, expected in graphs]

    def cmd_verify(self, args, config, executor):
        verdicts = self._verify(args, config, executor)
        payload = [verdict.as_dict() for verdict in verdicts]
        self.write(config, self._json(payload))
        for verdict in verdicts:
            self.report(config, "%s: %s" % (verdict.claim, verdict.verdict))
        return 0 if all(verdict.passed for verdict in verdicts) else 1

    def cmd_family(self, args, config, executor):
        template = specs.parse_family(args.f_template, args.g_template, max_order=args.field_cap)
        report = analysis.family_table(template, args.qs, executor=executor, **config.sweep_kwargs)
        if config.format == 'csv':
            rows = [{
                column: format_decimal(value) if isinstance(value, float) else value
                for column, value in row.items()
            } for row in report.rows]
            self.write(config, self._csv(FAMILY_CSV_COLUMNS, rows))
        else:
            self.write(config, self._json(report.as_dict()))
        if report.trend.verdict == SKIPPED:
            self.report(config, "trend: not enough rows")
        else:
            self.report(config, "trend of lambda_2/q^2: %s" % report.trend.verdict)
        return 0

    def cmd_export(self, args, config, executor):
        fmt = config.format
        if args.what in ('edges', 'connection-set'):
            spec = self.make_spec(args, field_cap=args.field_cap)
            if spec is None:
                raise InvalidSpec("export %s needs a spec" % args.what)
            s_graph = build_s_graph(spec, vertex_cap=config.vertex_cap)
            if args.what == 'connection-set':
                self.write(config, s_graph.export_connection_set())
            else:
                self.write(config, export_edges(s_graph.graph(), fmt))
            return 0

        if args.p is None:
            raise InvalidSpec("export %s needs --p (and --e)" % args.what)
        field = make_field(args.p, args.e, max_order=args.field_cap)
        bip = specs.bipartite_spec(args.bipartite, field, args.k or 2)
        g = build_bipartite(bip, vertex_cap=config.vertex_cap)
        if args.what == 'bipartite':
            self.write(config, export_edges(g, fmt))
            return 0
        if args.side is not None:
            side = SIDE_NAMES[args.side]
        else:
            side = bip.cayley_side if bip.cayley_side is not None else POINTS
        square = distance_two(g, side)
        if not square.meta['four_cycle_free']:
            logger.warning("%r has 4-cycles: %d multi-adjacencies collapsed", bip, square.meta['collapsed'])
        self.write(config, export_edges(square, fmt))
        return 0

    def dispatch(self, args, config):
        handler = getattr(self, 'cmd_%s' % args.command)
        with executors.make_executor(config.threads) as executor:
            return handler(args, config, executor)

    def make_parser(self):
        return UnifiedParser(self.options,
            commands=self.commands,
            with_dump_config=True,
            description=self.description,
            version=__version__,
            defaults={'work_cap': work_cap_default(self.environ)},
        )

    def run(self, argv):
        traceback = '--traceback' in argv
        try:
            args = self.make_parser().parse(argv[1:])
            self.setup_logging(args)
            config = RunConfig.from_args(args)
            logger.info("Running %s with %r", args.command, config)
            return self.dispatch(args, config)
        except SGraphError as e:
            if traceback:
                raise
            self.error('%s: %s' % (e.__class__.__name__, e), e.exit_code)


def main(argv):
    setup = Setup()
    return setup.run(argv)
