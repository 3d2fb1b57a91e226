# coding:utf-8

import functools
import logging
import os


# Use module-specific logger with a default null handler.
_logger = logging.getLogger('affmatch')
_logger.addHandler(logging.NullHandler())  # pragma: no cover
_logger.setLevel(logging.INFO)

MAX_N_ENV = 'AFFMATCH_MAX_N'
DEFAULT_MAX_N = 8
DEFAULT_STRICT_MAX_N = 6


# Evaluate arg that can be either a fixed value or a callable.
def _maybe_call(f, *args, **kwargs):
    if callable(f):
        try:
            return f(*args, **kwargs)
        except TypeError:
            return f
    else:
        return f


def _resolve_max_n(max_n, default=DEFAULT_MAX_N):
    """Exhaustive-search bound: explicit argument, then env, then default."""
    value = _maybe_call(max_n)
    if value is not None:
        return int(value)
    raw = os.environ.get(MAX_N_ENV)
    if raw:
        try:
            env_value = int(raw)
        except ValueError:
            _logger.warning("Ignoring %s=%r (not an integer)", MAX_N_ENV, raw)
        else:
            if env_value > 0:
                return env_value
            _logger.warning("Ignoring %s=%r (not positive)", MAX_N_ENV, raw)
    return default


def _prepare_logger(logger):
    if isinstance(logger, str):
        logger = logging.getLogger(logger)
    return logger


# Configure handler list with user specified handler and optionally
# with a default handler bound to the specified logger.
def _config_handlers(
    user_handlers, *, default_handler=None, logger=None, log_level=None
):
    handlers = []
    if logger is not None and default_handler is not None:
        assert log_level is not None, "Log level is not specified"
        # bind the specified logger to the default log handler
        log_handler = functools.partial(
            default_handler, logger=logger, log_level=log_level
        )
        handlers.append(log_handler)

    if user_handlers is None:
        return handlers

    # user specified handlers can either be an iterable of handlers
    # or a single handler. either way append them to the list.
    if hasattr(user_handlers, '__iter__'):
        handlers += list(user_handlers)
    else:
        handlers.append(user_handlers)

    return handlers


def _call_handlers(hdlrs, **details):
    for hdlr in hdlrs:
        hdlr(details)


# Default incumbent handler
def _log_incumbent(details, logger, log_level):
    msg = "New incumbent %s (cost %d) after %d nodes"
    logger.log(log_level, msg, list(details['matching']),
               details['cost'], details['nodes'])


# Default cut handler
def _log_cut(details, logger, log_level):
    cut = details['cut']
    msg = "Added %s cut #%d from leaf %s"
    logger.log(log_level, msg, cut.kind, details['cuts'],
               list(details['matching']))


# Default finish handler
def _log_finish(details, logger, log_level):
    msg = "Search finished: %s after %d nodes, %d cuts (%.3fs)"
    logger.log(log_level, msg, details['status'], details['nodes'],
               details['cuts'], details['elapsed'])
