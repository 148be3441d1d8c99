from .exceptions import RangeError

######################################################################
# Parsing Helpers

class ParseArgument:
    """
        Provides argument forwarding so that 'makeSubParser' can take function-like arguments.
    """
    def __init__(self, *args, **kwargs):
        self.args, self.kwargs = args, kwargs


######################################################################
# Derived Parsers


def _bounded(least, what):
    """ An argparse type that accepts integers >= least and raises RangeError otherwise. """
    class BoundedParser(int):
        def __new__(cls, val, **kwargs):
            try:
                value = int(val)
            except (TypeError, ValueError):
                raise RangeError(what, val, least) from None
            if value < least:
                raise RangeError(what, val, least)
            return super().__new__(cls, value, **kwargs)
    BoundedParser.__name__ = what
    return BoundedParser


class OrderArgument(ParseArgument):
    """ An integer option such as --k, with a lower bound. """
    def __init__(self, name, least=1, help=None, **kwargs):
        super().__init__(
            name,
            help=help or "Integer >= {}.".format(least),
            metavar='N',
            type=_bounded(least, name),
            **kwargs,
        )


class MethodArgument(ParseArgument):
    """ --method, restricted to the names a command's route table knows. """
    def __init__(self, methods, default):
        super().__init__(
            '--method', '-m',
            help='Route to compute with (default: {}). One of: {}.'.format(default, ', '.join(methods)),
            choices=list(methods),
            default=default,
            metavar='METHOD',
        )
