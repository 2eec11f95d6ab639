"""Text and JSON rendering of matrices, ideals and reports."""

import json

from .parse import format_poly


def render_matrix(M):
    """Rows in brackets, columns aligned, entries in the polynomial grammar."""
    cells = [[format_poly(v) for v in row] for row in M]
    if not cells:
        return "[]"
    widths = [max(len(row[j]) for row in cells) for j in range(len(cells[0]))]
    lines = []
    for row in cells:
        lines.append("[ " + "  ".join(c.rjust(w) for c, w in zip(row, widths)) + " ]")
    return "\n".join(lines)


def matrix_json(M):
    return [[format_poly(v) for v in row] for row in M]


def polys_json(polys):
    return [format_poly(f) for f in polys]


def dumps(data):
    return json.dumps(data, indent=2, sort_keys=False)
