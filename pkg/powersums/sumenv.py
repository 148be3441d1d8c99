# The runtime environment the psum tools run with is encapsulated into a
# single object, the PowerSumEnv. See the PowerSumEnv docstring for more.
from __future__ import annotations

import os
import sys
import typing

# rich provides the consoles, and when 'EXCEPTIONS' is set in the
# environment, beautified stacktraces.
from rich.console import Console
from rich.markup import escape
from rich.traceback import install as install_rich_traces


if typing.TYPE_CHECKING:
    import argparse
    from typing import Any, Callable, Optional, Union


# A single instance of each console for everyone to use.
CONSOLE = Console()
STDERR  = Console(stderr=True)

if os.getenv("EXCEPTIONS"):
    install_rich_traces(console=STDERR, show_locals=False, extra_lines=1)


class DiagnosticTheme:
    """ Markup wrapped around diagnostic lines on stderr; results never get any. """
    CLOSE = "[/]"
    debug, DEBUG = "[dim]",     "#"
    warn,  WARN  = "[orange3]", "WARNING: "

    def wrap(self, style: str, label: str, text: str) -> str:
        return f"{style}{label}{escape(text)}{self.CLOSE}"


class ColorTheme(DiagnosticTheme):
    """ The --color theme. """
    DEBUG = ":spider_web: "
    WARN  = ":warning: "


class PowerSumEnv:
    """
        Container for runtime configuration (cli flags, etc) and io operations
        so that commands don't have to pass huge sets of arguments around.
        Unknown attributes read as None.

        To print debug lines, use DEBUG<N>, e.g. DEBUG0, which takes a format() string and parameters, e.g.
            DEBUG1("k={k}, n={}", n, k=k)

        is equivalent to:
            if env.debug >= 1:
                print("#k={k}, n={}".format(n, k=k))

        WARN takes the same arguments and prints unless -qq was given.

        Results go through emit(), which never applies markup, highlighting or
        wrapping so output is byte-stable.
    """

    defaults = {
        'debug': 0,
        'detail': 0,
        'quiet': 0,
        'color': False,
        'format': 'plain',
        'console': CONSOLE,
        'stderr':  STDERR,
    }

    def __init__(self, properties: Optional[Union[argparse.Namespace, dict]] = None, **kwargs) -> None:
        self.__dict__.update(self.defaults)
        if properties is not None and hasattr(properties, '__dict__'):
            properties = vars(properties)
        self.__dict__.update(properties or {})
        self.__dict__.update(kwargs)

        if self.debug:
            install_rich_traces(console=STDERR, show_locals=True, extra_lines=2)
        self.theme = ColorTheme() if self.color else DiagnosticTheme()

    def _diagnostic(self, style: str, label: str) -> Callable[..., None]:
        def report(outText, *args, **kwargs) -> None:
            self.stderr.print(self.theme.wrap(style, label, str(outText).format(*args, **kwargs)), highlight=False, soft_wrap=True)
        return report

    def __getattr__(self, key: str) -> Any:
        """ Return the default for attributes we don't have """

        if key.startswith("DEBUG"):
            # Self-assembling DEBUGN functions
            if self.debug > int(key[5:]):
                debugFn = self._diagnostic(self.theme.debug, self.theme.DEBUG)
            else:
                debugFn = _silent
            setattr(self, key, debugFn)
            return debugFn

        if key == "WARN":
            warnFn = _silent if self.quiet > 1 else self._diagnostic(self.theme.warn, self.theme.WARN)
            setattr(self, key, warnFn)
            return warnFn

        return None

    def emit(self, text: str) -> None:
        """ Print one result line to stdout exactly as given. """
        try:
            self.console.print(text, markup=False, highlight=False, emoji=False, soft_wrap=True)
        except UnicodeEncodeError:
            # Exact values are ascii; only labels can fail here.
            encoding = sys.stdout.encoding or 'ascii'
            self.console.print(
                text.encode(encoding, errors="replace").decode(encoding),
                markup=False, highlight=False, emoji=False, soft_wrap=True,
            )


def _silent(*args, **kwargs) -> None:
    pass
