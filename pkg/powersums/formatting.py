"""
Provides a library of mechanisms for formatting output text to ensure
consistency across the psum commands: exact rationals, polynomials in
plain and LaTeX layouts, and the tabular plain-text reports.

Rationals are always written "p/q", or "p" when q = 1. Nothing in here
ever goes through float.
"""
from __future__ import annotations

import csv
import io
import json
import typing

from .core_math import as_rational

if typing.TYPE_CHECKING:
    from typing import Any, Callable, Iterable, Sequence  # noqa
    from .poly import Polynomial


class ColumnFormat:
    """
        Describes formatting of a column to be populated with data.

        Member Functions:

            str(col)
                Applies the alignment and width to the name to produce a
                correctly sized title field.

            format(value)
                Applies the same to key(value) to produce a correctly
                sized value field.

        Attributes:
            name
                Heading for column to display when calling title()
                e.g. name="Method"
            align
                Alignment formatter for .format
                e.g. align='<' or align='>' or align=''
            width
                Numeric value for the width of the column, never narrower
                than the name
            key
                Retrieve the printable name of the item

        e.g.
            cols = [
                ColumnFormat("Method", "<", "8", key=lambda item: item['method']),
                ColumnFormat("Checks", ">", "6", key=lambda item: item['checks']),
            ]
            rows = [ {'method': 'det', 'checks': 200}, {'method': 'faa', 'checks': 200}]
            print(*[str(col) for col in cols])
            for row in rows:
                print(*[col.format(row) for col in cols])
        Produces:
            Method   Checks
            det         200
            faa         200
    """
    name:       str                 # name of the column
    align:      str                 # format's alignment specifier
    width:      int                 # width specifier
    key:        Callable            # function to retrieve the printable name of the item

    def __init__(self, name, align, width, key=lambda item: item) -> None:
        self.name = name
        self.align = align
        self.width = max(int(width), len(name))
        self.key = key

    def __str__(self) -> str:
        return f'{self.name:{self.align}{self.width}}'

    def format(self, value: Any) -> str:
        """ Returns the string formatted with a specific value"""
        return f'{self.key(value):{self.align}{self.width}}'


class RowFormat:
    """
        Describes an ordered collection of ColumnFormats
        for dispay data from rows, such that calling
          rowFmt.format(rowData)
        will return the result of formatting each column
        against rowData.

        Member Functions

            addColumn(name, align, width, key)
                Adds a ColumnFormat to the end of the row

            heading()
                Returns the column headings and an underline

            format(rowData):
                Returns the result of applying rowData to all
                of the columns
    """
    columns:        list[ColumnFormat]

    def __init__(self):
        self.columns = []

    def addColumn(self, *args, **kwargs) -> 'RowFormat':
        self.columns.append(ColumnFormat(*args, **kwargs))
        return self

    def __str__(self) -> str:
        return ' '.join(str(col) for col in self.columns).rstrip()

    def heading(self) -> tuple[str, str]:
        """ Returns a title and the appropriate underline for that text. """
        headline = f"{self}"
        return headline, '-' * len(headline)

    def format(self, row_data: Any) -> str:
        return ' '.join(col.format(row_data) for col in self.columns).rstrip()


def max_len(iterable, key=lambda item: item) -> int:
    return max((len(key(item)) for item in iterable), default=0)


######################################################################
# Exact values


def format_rational(value) -> str:
    """ "p/q", or "p" for integers. """
    value = as_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "{}/{}".format(value.numerator, value.denominator)


def latex_rational(value) -> str:
    value = as_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    sign = "-" if value < 0 else ""
    return "{}\\frac{{{}}}{{{}}}".format(sign, abs(value.numerator), value.denominator)


def polynomial_strings(poly: Polynomial) -> list[str]:
    """ The serialized coefficient list, lowest degree first. """
    return [format_rational(c) for c in poly.coeffs]


######################################################################
# Polynomials


def _terms(poly: Polynomial):
    """ (sign, magnitude, power) for each nonzero coefficient, highest power first. """
    for power in range(poly.degree, -1, -1):
        c = poly[power]
        if c:
            yield ("-" if c < 0 else "+"), abs(c), power


def _join(pieces: Iterable[tuple[str, str]]) -> str:
    text = ""
    for sign, body in pieces:
        if not text:
            text = ("-" if sign == "-" else "") + body
        else:
            text += " {} {}".format(sign, body)
    return text or "0"


def format_polynomial(poly: Polynomial, symbol: str = "x") -> str:
    """ e.g. "1/10*N^10 - 3/8*N^8 + ... - 31/2048" """
    def term(magnitude, power):
        if power == 0:
            return format_rational(magnitude)
        var = symbol if power == 1 else "{}^{}".format(symbol, power)
        if magnitude == 1:
            return var
        return "{}*{}".format(format_rational(magnitude), var)

    return _join((sign, term(magnitude, power)) for sign, magnitude, power in _terms(poly))


def latex_polynomial(poly: Polynomial, symbol: str = "x") -> str:
    """ e.g. "\\frac{1}{10}N^{10} - \\frac{3}{8}N^{8} + ..." """
    def term(magnitude, power):
        if power == 0:
            return latex_rational(magnitude)
        var = symbol if power == 1 else "{}^{{{}}}".format(symbol, power)
        if magnitude == 1:
            return var
        return latex_rational(magnitude) + var

    return _join((sign, term(magnitude, power)) for sign, magnitude, power in _terms(poly))


######################################################################
# Machine-readable output


def to_json(document: dict) -> str:
    """ Single-line JSON; parsing and re-serializing gives the same bytes. """
    return json.dumps(document)


def to_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(["" if cell is None else cell for cell in row])
    return buffer.getvalue().rstrip("\n")
