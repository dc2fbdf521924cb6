"""
The plumbing behind the ``rainbowpath`` command.

Subclass :class:`App`, fill out ``execute`` and use the ``main`` classmethod as
the entry point:

.. code-block:: python

    from rainbowpath.app import App

    class MyApp(App):
        def execute(self, args_obj, args_dict, extra_args, logging_handler, **kwargs):
            print("Coloring some edges")

    main = MyApp.main

.. autoclass:: App

.. autoclass:: CliParser
"""
import argparse
import logging
import os
import sys

from rainbowpath.errors import RainbowError, UserQuit
from rainbowpath.logging import setup_logging


class Ignore(object):
    pass


class BadOption(RainbowError):
    desc = "Bad option"


class ArgumentError(RainbowError):
    desc = "Bad cli argument"


def _flag_and_default(replacement):
    """Replacements are either ``"--flag"`` or ``("--flag", default)``"""
    if isinstance(replacement, tuple):
        return replacement
    return replacement, Ignore


def _default_options(default):
    return {} if default is Ignore else {"default": default}


########################
###   APP
########################


class App(object):
    """
    .. autoattribute:: VERSION

    .. autoattribute:: cli_categories

        Arguments whose name starts with ``<category>_`` are grouped into
        ``args_dict[category]``. With ``cli_categories = ["gen"]`` the
        arguments ``gen_family`` and ``gen_n`` become
        ``args_dict["gen"] == {"family": ..., "n": ...}``.

    .. autoattribute:: cli_environment_defaults

        Map of environment variable to ``--argument``. Values may be a tuple of
        ``(argument, default)`` for when the variable is not set.

    .. autoattribute:: cli_positional_replacements

        Positional arguments that stand in for ``--arguments``. For example
        ``[("--task", "help"), "--graph"]`` lets ``rainbowpath reduce g.txt``
        mean ``--task reduce --graph g.txt``.

    Hooks
        .. automethod:: execute

        .. automethod:: setup_other_logging

        .. automethod:: specify_other_args

        .. automethod:: exception_handler

    Default cli arguments
        ``--verbose``, ``--silent`` and ``--debug`` pick the log level and are
        mutually exclusive. ``--debug`` also re-raises errors with a traceback.

        ``--logging-program``, ``--json-console-logs`` and
        ``--logging-handler-file`` are handed to
        :func:`~rainbowpath.logging.setup_logging`.

        ``--version`` prints the version and quits.
    """

    VERSION = Ignore
    issue_tracker_link = None

    CliParserKls = property(lambda s: CliParser)
    logging_handler_file = property(lambda s: sys.stderr)

    cli_categories = None
    cli_description = "Edge colored graph toolkit"
    cli_environment_defaults = None
    cli_positional_replacements = None

    silent_by_default_environ_name = "RAINBOWPATH_SILENT_BY_DEFAULT"

    @classmethod
    def main(kls, argv=None, **execute_args):
        """Instantiate this class and run the mainline"""
        kls().mainline(argv, **execute_args)

    def execute(self, args_obj, args_dict, extra_args, logging_handler, **kwargs):
        """
        Hook for executing the application itself

        args_obj
            The object from argparse.parse_args

        args_dict
            The options for args_obj as a dictionary, grouped by cli_categories

        extra_args
            A string of everything specified after a ``--`` on the cli.

        logging_handler
            The logging handler created by setup_logging
        """
        raise NotImplementedError()

    def setup_other_logging(self, args_obj, verbose=False, silent=False, debug=False):
        """Hook for quietening or enabling other loggers"""

    def specify_other_args(self, parser, defaults):
        """Hook for adding more arguments to the argparse parser"""

    def exception_handler(self, exc_info, args_obj, args_dict, extra_args):
        """Hook for reporting errors elsewhere"""

    def mainline(self, argv=None, print_errors_to=sys.stdout, **execute_args):
        """
        Parse argv, setup logging and run ``execute``.

        A RainbowError is printed and turned into exit code 1 unless
        ``--debug`` was given. Ctrl-c becomes a :class:`UserQuit`.
        """
        args_obj = None
        try:
            args_obj, args_dict, extra_args = self.make_cli_parser().interpret_args(
                argv, self.cli_categories
            )
            if args_obj.version:
                print(self.VERSION)
                return

            try:
                handler = self.setup_logging(args_obj)
                self.execute(args_obj, args_dict, extra_args, handler, **execute_args)
            except KeyboardInterrupt:
                if args_obj.debug:
                    raise
                raise UserQuit()
            except:
                self.exception_handler(sys.exc_info(), args_obj, args_dict, extra_args)
                raise
        except RainbowError as error:
            self.print_error(error, print_errors_to)
            if args_obj is not None and args_obj.debug:
                raise
            sys.exit(1)
        except Exception:
            msg = "Something unexpected happened!!"
            if self.issue_tracker_link:
                msg = f"{msg} Please file a ticket in the issue tracker! {self.issue_tracker_link}"
            print(f"\n\n{msg}\n{'=' * len(msg)}\n")
            raise

    def print_error(self, error, fle):
        print("", file=fle)
        print("!" * 80, file=fle)
        print(f"Something went wrong! -- {error.__class__.__name__}", file=fle)
        print(f"\t{error}", file=fle)

    def setup_logging(self, args_obj, log=None, only_message=False):
        if args_obj.verbose or args_obj.debug:
            level = logging.DEBUG
        elif args_obj.silent:
            level = logging.ERROR
        else:
            level = logging.INFO

        handler = setup_logging(
            log=log,
            level=level,
            program=args_obj.logging_program,
            only_message=only_message,
            logging_handler_file=args_obj.logging_handler_file or self.logging_handler_file,
            json_to_console=args_obj.json_console_logs,
        )

        self.setup_other_logging(args_obj, args_obj.verbose, args_obj.silent, args_obj.debug)
        return handler

    def make_cli_parser(self):
        """A CliParser whose ``specify_other_args`` is this app's"""
        kls = type("CliParser", (self.CliParserKls,), {"specify_other_args": self.specify_other_args})
        return kls(
            self.cli_description,
            self.cli_positional_replacements,
            self.cli_environment_defaults,
            silent_by_default_environ_name=self.silent_by_default_environ_name,
        )


########################
###   CliParser
########################


class CliParser(object):
    """Turns argv into argparse results, with positional stand ins for flags"""

    def __init__(
        self,
        description,
        positional_replacements=None,
        environment_defaults=None,
        silent_by_default_environ_name=None,
    ):
        self.description = description
        self.positional_replacements = (
            [] if positional_replacements is None else positional_replacements
        )
        self.environment_defaults = {} if environment_defaults is None else environment_defaults
        self.silent_by_default_environ_name = silent_by_default_environ_name

    def specify_other_args(self, parser, defaults):
        """Hook to specify more arguments"""

    def interpret_args(self, argv, categories=None):
        """
        Parse argv and return ``(args_obj, args_dict, extra)``

        extra is everything after a ``--`` and args_dict is args_obj as a
        dictionary with categorised arguments nested under their category.
        """
        categories = categories or []
        args_obj, extra = self.parse_args(argv)

        args_dict = {category: {} for category in categories}
        for key, val in sorted(vars(args_obj).items()):
            category = next((c for c in categories if key.startswith(f"{c}_")), None)
            if category is None:
                args_dict[key] = val
            else:
                args_dict[category][key[len(category) + 1 :]] = val

        return args_obj, args_dict, extra

    def parse_args(self, argv=None):
        if argv is None:
            argv = sys.argv[1:]
        args, other_args, defaults = self.split_args(argv)
        parsed = self.make_parser(defaults).parse_args(args)
        self.check_args(argv, defaults, self.positional_replacements)
        return parsed, other_args

    def check_args(self, argv, defaults, positional_replacements):
        """Complain when an option was given both positionally and as a --flag"""
        if "--" in argv:
            argv = argv[: argv.index("--")]

        flags = [arg for arg in argv if arg.startswith("-")]
        leading = 0
        for arg in argv:
            if arg.startswith("-"):
                break
            leading += 1

        for position, replacement in enumerate(positional_replacements[:leading], start=1):
            flag, _ = _flag_and_default(replacement)
            if flag in flags and "default" in defaults.get(flag, {}):
                raise BadOption(
                    "Please don't specify an option as a positional argument and as a --flag",
                    argument=flag,
                    position=position,
                )

    def split_args(self, argv):
        """Split argv at the first ``--`` and find defaults for the first half"""
        argv = list(sys.argv[1:] if argv is None else argv)

        extras = []
        if "--" in argv:
            index = argv.index("--")
            argv, extras = argv[:index], argv[index + 1 :]

        defaults = self.make_defaults(argv, self.positional_replacements, self.environment_defaults)
        return argv, " ".join(extras), defaults

    def make_defaults(self, argv, positional_replacements, environment_defaults):
        """
        Return ``{"--flag": {"default": value}}`` from the environment and from
        leading positional arguments, removing those positionals from argv.

        Positional arguments win over environment defaults, which win over
        the defaults in positional_replacements.
        """
        defaults = {}

        for env_name, replacement in environment_defaults.items():
            flag, fallback = _flag_and_default(replacement)
            if env_name in os.environ:
                defaults[flag] = {"default": os.environ[env_name]}
            else:
                defaults[flag] = _default_options(fallback)

        replacements = [_flag_and_default(replacement) for replacement in positional_replacements]
        for flag, _ in replacements:
            if not argv or argv[0].startswith("-"):
                break
            defaults[flag] = {"default": argv.pop(0)}

        for flag, fallback in replacements:
            defaults.setdefault(flag, _default_options(fallback))

        return defaults

    @property
    def silent_by_default(self):
        """Whether we offer ``--unsilent`` instead of ``--silent``"""
        name = self.silent_by_default_environ_name
        return name is not None and os.environ.get(name) == "1"

    def make_parser(self, defaults=None):
        parser = argparse.ArgumentParser(description=self.description)

        levels = parser.add_mutually_exclusive_group()
        levels.add_argument("--verbose", help="Enable debug logging", action="store_true")
        if self.silent_by_default:
            levels.add_argument(
                "--unsilent", help="Log more than just errors", action="store_false", dest="silent"
            )
        else:
            levels.add_argument("--silent", help="Only log errors", action="store_true")
        levels.add_argument("--debug", help="Debug logs and tracebacks", action="store_true")

        parser.add_argument("--logging-program", help="Program name put into json logs", default="")
        parser.add_argument(
            "--json-console-logs", help="Log json lines to the console", action="store_true"
        )
        parser.add_argument(
            "--logging-handler-file", help="File to print logs to", type=argparse.FileType("w")
        )
        parser.add_argument("--version", help="Print the version and quit", action="store_true")

        self.specify_other_args(parser, defaults or {})
        return parser
