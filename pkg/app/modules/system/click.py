# -*- coding: utf-8 -*-
import click
from typer.core import TyperGroup
from settings import Cli

EXIT_CODES = (
    (0, "success"),
    (1, "unexpected failure"),
    (2, "invalid configuration or usage"),
    (3, "infeasible instance"),
    (4, "search budget exhausted"),
    (5, "instance too large"),
    (6, "corrupt cache record"),
    (7, "other domain error"),
)


def exit_code_epilog() -> str:
    rows = "\n".join(f"  {code}  {meaning}" for code, meaning in EXIT_CODES)
    return f"\b\nExit codes:\n{rows}"


class PrettyHelpFormatter(click.HelpFormatter):
    """click.HelpFormatter with per-element styles and fixed column geometry.

    :param styles: style name to ``click.style`` keyword arguments.
    :param column_width: the maximum width of the first column.
    :param column_spacing: the number of spaces between the first and second column.
    """

    def __init__(self, *args, styles=None, column_width=None, column_spacing=None, **kwargs):
        self.styles = styles or {}
        self.column_width = column_width
        self.column_spacing = column_spacing
        super().__init__(*args, **kwargs)

    def prettify(self, target, message):
        if target in self.styles:
            message = click.style(message, **self.styles[target])
        return message

    def write_usage(self, prog, args="", prefix="Usage: "):
        parts = prefix.split(":")
        prefix = ":".join([self.prettify("usage-prefix", parts[0])] + parts[1:])
        super().write_usage(self.prettify("usage-prog", prog), self.prettify("usage-args", args), prefix=prefix)

    def write_heading(self, heading):
        super().write_heading(self.prettify("heading", heading))

    def write_dl(self, rows, col_max=30, col_spacing=2):
        kind = ("option-name", "option-description")
        styled = [(self.prettify(kind[0] if term.startswith("-") else "command-name", term),
                   self.prettify(kind[1] if term.startswith("-") else "command-description", text))
                  for term, text in rows]
        super().write_dl(styled, self.column_width or col_max, self.column_spacing or col_spacing)


class UnsortedGroup(TyperGroup):
    """Commands listed in registration order, grouped by their prefix."""

    def list_commands(self, ctx):
        return list(self.commands)


def style_errors(error_style, exception_style):
    """Colour usage errors and click exceptions on stderr."""
    def show_usage(self, file=None):
        file = file or click.get_text_stream("stderr")
        color = self.ctx.color if self.ctx is not None else None
        if self.ctx is not None:
            click.echo(self.ctx.get_usage() + "\n", file=file, color=color)
        click.echo(click.style(f"Error: {self.format_message()}", **error_style), file=file, color=color)

    def show_exception(self, file=None):
        file = file or click.get_text_stream("stderr")
        click.echo(click.style(f"Error: {self.format_message()}", **exception_style), file=file)

    click.exceptions.UsageError.show = show_usage
    click.exceptions.ClickException.show = show_exception


def setup_click(settings: Cli):
    """Apply the ``[cli]`` settings to click help rendering and error output."""
    styles = settings.styles
    style_errors(styles.get("error", {"fg": "red"}), styles.get("exception", {"fg": "red"}))

    def make_formatter(self):
        return PrettyHelpFormatter(width=self.terminal_width, max_width=settings.max_content_width, styles=styles,
                                   column_width=settings.column_width, column_spacing=settings.column_spacing)

    click.core.Context.make_formatter = make_formatter
