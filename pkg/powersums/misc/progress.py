from rich.console import Console
from rich.progress import (
        Progress as RichProgress,
        ProgressColumn,
        BarColumn, MofNCompleteColumn, SpinnerColumn,
        TaskProgressColumn, TextColumn, TimeElapsedColumn, TimeRemainingColumn,
)

from typing import Iterable, Optional, Type  # noqa


class BarStyle:
    """ Base class for Progress bar style types. """
    def __init__(self, width: int = 10, *, add_columns: Optional[Iterable[ProgressColumn]]):
        self.columns = [SpinnerColumn(), TextColumn("[progress.description]{task.description}"), BarColumn(bar_width=width)]
        if add_columns:
            self.columns.extend(add_columns)


class CountingBar(BarStyle):
    """ Counts M/N cells to completion, with elapsed and remaining time. """
    def __init__(self, width: int = 10):
        super().__init__(width, add_columns=[MofNCompleteColumn(), TimeElapsedColumn(), TimeRemainingColumn()])


class DefaultBar(BarStyle):
    """ Creates a simple default progress bar with a percentage and time elapsed. """
    def __init__(self, width: int = 10):
        super().__init__(width, add_columns=[TaskProgressColumn(), TimeElapsedColumn()])


class Progress:
    """
    Facade around the rich Progress bar so that long sweeps only have to
    call increment(). A Progress created with show=False does nothing.
    """
    def __init__(self,
                 max_value: int,
                 width: Optional[int] = None,
                 prefix: Optional[str] = None,
                 *,
                 style: Optional[Type[BarStyle]] = None,
                 console: Optional[Console] = None,
                 show: bool = True,
                 ) -> None:
        """
            :param max_value: Last value we can reach (100%).
            :param width:     How wide to make the bar itself.
            :param prefix:    Text to print between the spinner and the bar.
            :param style:     Bar-style factory to use for styling.
            :param console:   Where to draw; psum draws on stderr so results stay clean.
            :param show:      If False, disables the bar entirely.
        """
        self.show = bool(show)
        self.value = 0
        self.max_value = max_value
        self.progress, self.task = None, None
        if not show:
            return

        style = style or DefaultBar
        self.prefix = prefix or "Working..."
        self.progress = RichProgress(
            *style(width=width or 25).columns,
            console=console,
            # Hide it once it's finished.
            transient=True, auto_refresh=True, refresh_per_second=5
        )
        self.task = self.progress.add_task(self.prefix, total=max_value, start=True)
        self.progress.start()

    def __enter__(self):
        return self

    def __exit__(self, *args, **kwargs):
        self.clear()

    def increment(self, value: int = 1) -> None:
        self.value += value
        if self.show:
            self.progress.update(self.task, completed=self.value)

    def clear(self) -> None:
        """ Remove the current progress bar, if any. """
        if not self.show:
            return
        if self.task is not None:
            self.progress.remove_task(self.task)
            self.task = None
        if self.progress:
            self.progress.stop()
            self.progress = None
