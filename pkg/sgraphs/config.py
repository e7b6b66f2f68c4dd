# -*- coding: utf-8 -*-
# Copyright (c) 2026 The sgraphs authors
# This code is distributed under the 2-clause BSD License.

import argparse
import configparser
import sys

from .errors import ConfigError


class Group(object):
    """A group of options/args.

    Maps to a section for configparser.

    Attributes:
        name (str): short name for the section.
            Used as section name in configparser and, unless prefixed is
            False, as prefix in argparse.
        title (str): verbose name for group header in argparse
        args (Arg list): Arguments within the group
        prefixed (bool): whether flags read --<name>-<option>
    """
    def __init__(self, name, title, args, prefixed=True):
        self.name = name
        self.title = title
        self.args = args
        self.prefixed = prefixed and bool(name)

    @property
    def section(self):
        return self.name or configparser.DEFAULTSECT

    def make_argparse_group(self, parser, suppress=False):
        """Create and attach an argparse-style group to its parser."""
        if self.name:
            group = parser.add_argument_group(self.title)
        else:
            group = parser

        for arg in self.args:
            arg.add_to_argparse_group(self.name if self.prefixed else '', group, suppress=suppress)

    def ini_lines(self):
        """Generate example configuration lines."""
        if self.name:
            yield '## %s' % self.title
        yield '[%s]' % self.section

        for arg in self.args:
            for line in arg.ini_lines(self.name if self.prefixed else ''):
                yield line

    def dest(self, arg):
        if self.prefixed:
            return '%s_%s' % (self.name, arg.dest)
        return arg.dest

    def fill_argparse_defaults(self, parser, parsed_file):
        for arg in self.args:
            try:
                value = parsed_file.get(self.section, arg.main_option)
            except (configparser.NoSectionError, configparser.NoOptionError):
                continue

            parser.set_defaults(**{self.dest(arg): value})

    def check_section(self, parsed_file):
        """Reject keys of our section that no Arg declares."""
        if self.section == configparser.DEFAULTSECT:
            keys = set(parsed_file.defaults())
        elif parsed_file.has_section(self.section):
            keys = set(parsed_file.options(self.section)) - set(parsed_file.defaults())
        else:
            return
        unknown = keys - set(arg.main_option for arg in self.args)
        if unknown:
            raise ConfigError("unknown option(s) in section [%s]: %s"
                % (self.section, ', '.join(sorted(unknown))))


class Arg(object):
    """A single argument/option.

    Attributes:
        options (str list): command line flags
        main_option (str): the main option, without leading dashes
        default (obj): the default value
        help (str): the help text
        extra (dict): additional keywords for argparse
    """
    def __init__(self, *options, **kwargs):
        if 'dest' in kwargs:
            raise ValueError("The 'dest' kwarg is not allowed.")

        self.options = options
        self.main_option = options[0].lstrip('-')
        self.default = kwargs.pop('default', None)
        self.help = kwargs.pop('help', '')
        self.extra = kwargs

    @property
    def dest(self):
        return self.main_option.replace('-', '_')

    @property
    def positional(self):
        return not self.options[0].startswith('-')

    def prefixed_options(self, prefix):
        """Retrieve the list of prefixed options, using a given prefix."""
        for option in self.options:
            if not prefix:
                yield option
            elif option.startswith('--'):
                yield '--%s-%s' % (prefix, option[2:])
            elif option.startswith('-'):
                # Short option
                yield option
            else:
                # Positional argument
                yield '%s_%s' % (prefix, option)

    def config_help_line(self, prefix):
        """Build a documentation line for configuration files."""
        options_str = ' / '.join(self.prefixed_options(prefix))
        if self.help:
            return '; %s : %s' % (options_str, self.help)
        else:
            return '; %s' % options_str

    def config_line(self):
        """Build an example key/value pair for the configuration file."""
        default = '' if self.default is None else self.default
        return '%s = %s' % (self.main_option, default)

    def ini_lines(self, prefix):
        yield self.config_help_line(prefix)
        if self.extra.get('choices'):
            yield '; Options: %s' % ', '.join(sorted(str(c) for c in self.extra['choices']))
        yield self.config_line()

    def add_to_argparse_group(self, prefix, group, suppress=False):
        options = list(self.prefixed_options(prefix))
        kwargs = dict(self.extra)
        if not self.positional:
            kwargs['default'] = argparse.SUPPRESS if suppress else self.default
        elif self.default is not None:
            kwargs['default'] = self.default
        group.add_argument(*options, help=self.help, **kwargs)


class Command(object):
    """A subcommand, with its own (non-configurable) arguments.

    Attributes:
        name (str): subcommand name
        help (str): one-line summary
        args (Arg list): subcommand arguments
        description (str): long help, shown by '<name> --help'
    """
    def __init__(self, name, help, args, description=''):  # pylint: disable=W0622
        self.name = name
        self.help = help
        self.args = args
        self.description = description or help


class DumpConfigAction(argparse.Action):
    def __init__(self, option_strings, unified_parser,
            dest=argparse.SUPPRESS, default=False, required=False, help='',
            **kwargs):  # pylint: disable=W0622
        super(DumpConfigAction, self).__init__(option_strings, dest=dest,
                default=default, required=required, help=help, **kwargs)
        self.unified_parser = unified_parser

    def __call__(self, parser, namespace, values, option_string=None):
        cfg = self.unified_parser.make_ini(progname=parser.prog)
        sys.stdout.write(cfg)
        parser.exit(0)


class UnifiedParser(object):
    """A global configuration parser.

    Configurable groups are accepted both before and after the subcommand;
    ini files only ever feed the groups.

    Attributes:
        options (Group list): configurable option groups
        commands (Command list): subcommands
        with_dump_config (bool): whether to add the --dump-config option
        description (str): optional description for the program parser
        version (str): optional version number
        defaults (dict): dest => value overrides of built-in defaults,
            applied below config files (e.g from the environment)
    """

    def __init__(self, options, commands=(), with_dump_config=True,
            description='', version='', defaults=None, **kwargs):
        self.options = options
        self.commands = commands
        self.with_dump_config = with_dump_config
        self.description = description
        self.version = version
        self.defaults = defaults or {}
        super(UnifiedParser, self).__init__(**kwargs)

    def _make_ini_lines(self, progname=''):
        if progname:
            yield '; Configuration file for %s' % progname
            yield ''

        for group in self.options:
            for line in group.ini_lines():
                yield line
            yield ''

    def make_ini(self, progname=''):
        return '\n'.join(self._make_ini_lines(progname))

    def fill_argparse_parser(self, parser, suppress=False):
        for group in self.options:
            group.make_argparse_group(parser, suppress=suppress)

    def fill_argparse_defaults(self, parser, parsed_file):
        parser.set_defaults(**self.defaults)
        for group in self.options:
            group.fill_argparse_defaults(parser, parsed_file)

    def check_config(self, parsed_file):
        known = set(group.section for group in self.options)
        for section in parsed_file.sections():
            if section not in known:
                raise ConfigError("unknown configuration section [%s]" % section)
        for group in self.options:
            group.check_section(parsed_file)

    def make_parser(self, full=True):
        """Prepare the parser.

        Args:
            full (bool): whether to include all options, or only --config.
        """
        parser = argparse.ArgumentParser(
            description=self.description,
            add_help=full,
        )

        parser.add_argument('--config', action='append',
            help="Read additional configuration options from these files")

        if not full:
            return parser

        self.fill_argparse_parser(parser)

        if self.with_dump_config:
            parser.add_argument('--dump-config', action=DumpConfigAction,
                unified_parser=self, nargs=0,
                help="Display a default config file.")

        if self.version:
            parser.add_argument('-V', '--version', action='version',
                version='%(prog)s ' + self.version)

        if self.commands:
            subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
            subparsers.required = True
            for command in self.commands:
                subparser = subparsers.add_parser(command.name, help=command.help,
                    description=command.description,
                    formatter_class=argparse.RawDescriptionHelpFormatter)
                for arg in command.args:
                    arg.add_to_argparse_group('', subparser)
                self.fill_argparse_parser(subparser, suppress=True)

        return parser

    def read_config(self, filenames):
        cp = configparser.ConfigParser(interpolation=None)
        if filenames:
            read = cp.read(filenames)
            missing = [name for name in filenames if name not in read]
            if missing:
                raise ConfigError("cannot read configuration file(s): %s" % ', '.join(missing))
        self.check_config(cp)
        return cp

    def parse(self, argv):
        """Parse an argument vector.

        This should be sys.argv[1:].

        Raises:
            ConfigError: unreadable file, unknown section or option
        """
        # First, get the --config option.
        simple_parser = self.make_parser(full=False)
        simple_args, _extra = simple_parser.parse_known_args(argv)
        cp = self.read_config(simple_args.config)

        # Now, generate the full, exhaustive parser
        full_parser = self.make_parser(full=True)
        self.fill_argparse_defaults(full_parser, cp)

        return full_parser.parse_args(argv)
