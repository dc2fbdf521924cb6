"""
.. autofunction:: setup_logging

.. autoclass:: LogContext
    :members:
    :member-order: bysource
"""
import inspect
import json
import logging
import sys
import traceback
from datetime import datetime, timezone

try:
    from rainbow_logging_handler import RainbowLoggingHandler
except ImportError:
    RainbowLoggingHandler = logging.StreamHandler


def obj_to_string(v):
    """Json friendly form of values that json doesn't know about"""
    if inspect.istraceback(v):
        return " |:| ".join(traceback.format_tb(v))
    if hasattr(v, "as_dict"):
        return json.dumps(v.as_dict(), default=obj_to_string, sort_keys=True)
    if isinstance(v, str):
        return v
    return repr(v)


def record_as_dict(record):
    """Dictionary messages as they are, anything else under ``msg``"""
    if isinstance(record.msg, dict):
        return dict(record.msg)

    message = record.getMessage()
    try:
        loaded = json.loads(message)
    except ValueError:
        loaded = None
    return loaded if isinstance(loaded, dict) else {"msg": message}


def console_message(msg):
    """``{"msg": "Reduced", "removed": 2}`` becomes ``Reduced\\tremoved=2``"""

    def show(v):
        if isinstance(v, dict):
            return json.dumps(v, default=repr, sort_keys=True)
        if hasattr(v, "as_dict"):
            return json.dumps(v.as_dict(), default=repr, sort_keys=True)
        return v

    parts = [msg["msg"]] if msg.get("msg") else []
    parts.extend(f"{key}={show(val)}" for key, val in sorted(msg.items()) if key != "msg")
    return "\t".join(parts)


class JsonToConsoleHandler(logging.StreamHandler):
    """One json object per log record"""

    def __init__(self, program, stream=None):
        self.program = program
        super().__init__(stream=stream)

    def format(self, record):
        line = record_as_dict(record)
        if self.program:
            line["program"] = self.program
        for attr in ("name", "levelname"):
            if getattr(record, attr, None):
                line[attr] = getattr(record, attr)
        line["@timestamp"] = datetime.now(timezone.utc).isoformat()

        if record.exc_info:
            line["traceback"] = self.formatter.formatException(record.exc_info)
        if record.stack_info:
            line["stack"] = self.formatter.formatStack(record.stack_info)

        return json.dumps(line, default=obj_to_string, sort_keys=True)


class ConsoleHandler(RainbowLoggingHandler):
    """Dictionary messages become ``msg\\tkey=value\\tkey=value``"""

    def format(self, record):
        if isinstance(record.msg, dict):
            record = logging.makeLogRecord(
                {**record.__dict__, "msg": console_message(record.msg), "args": None}
            )
        return super().format(record)


class LogContext(object):
    """
    An object to represent logging context

    One of these is provided as ``rainbowpath.logging.lc``

    .. code-block:: python

        from rainbowpath.logging import lc

        import logging

        log = logging.getLogger("rainbowpath.reduction")

        log.info(lc("Reduced graph", removed=12, mode="minimal"))

        ctx = lc.using(n=40, sample=3)
        log.info(ctx("Searching pairs", engine="exact"))

    With :func:`setup_logging` in place the console shows the keyword arguments
    as tab separated ``key=value`` pairs and json output gets them as keys.

    .. automethod:: __call__
    """

    def __init__(self, initial=None, extra=None):
        self.context = dict(initial or {})
        if extra:
            self.context.update(extra)

    def __call__(self, *args, **kwargs):
        """
        Return a dictionary of ``{"msg": " ".join(args), **kwargs}``
        """
        res = dict(self.context)
        if args:
            res["msg"] = " ".join(args)
        res.update(kwargs)
        return res

    def using(self, **kwargs):
        """Return a new logging context with these extra context"""
        return LogContext(self.context, kwargs)


lc = LogContext()


def setup_logging(
    log=None,
    level=logging.INFO,
    program="",
    only_message=False,
    json_to_console=False,
    logging_handler_file=sys.stderr,
):
    """
    Setup the logging handler

    .. note:: console logs use colors if ``rainbow_logging_handler`` is
        installed in your python environment.

    log
        The log to add the handler to.

        * If this is a string we do logging.getLogger(log)
        * If this is None, we do logging.getLogger("")
        * Otherwise we use as is

    level
        The level we set the logging to

    program
        Put into each json line as ``program`` when ``json_to_console``

    only_message
        Whether to only print out the message when going to the console

    json_to_console
        Write json lines instead of human formatted lines

    logging_handler_file
        The file to print to
    """
    if log is None or isinstance(log, str):
        log = logging.getLogger(log)

    # Protect against this being called multiple times
    for h in log.handlers:
        if getattr(h, "rainbowpath_logging", False):
            return h

    if json_to_console:
        handler = JsonToConsoleHandler(program, logging_handler_file)
        handler.setFormatter(logging.Formatter("%(message)s"))
    else:
        handler = ConsoleHandler(logging_handler_file)
        base_format = "%(name)-24s %(message)s"
        if only_message:
            base_format = "%(message)s"

        if hasattr(handler, "_column_color"):
            handler._column_color["%(asctime)s"] = ("cyan", None, False)
            handler._column_color["%(levelname)-7s"] = ("green", None, False)
            handler._column_color["%(message)s"][logging.INFO] = ("blue", None, False)

        if only_message:
            handler.setFormatter(logging.Formatter(base_format))
        else:
            handler.setFormatter(logging.Formatter(f"%(asctime)s %(levelname)-7s {base_format}"))

    handler.rainbowpath_logging = True
    log.addHandler(handler)
    log.setLevel(level)
    return handler
