import csv
import io
import math


def format_list(x):
    return "\n".join("- %s" % s for s in sorted(x))


def format_number(x):
    """Format a number for tabular output (10 significant digits)."""
    if isinstance(x, (int, str)) and not isinstance(x, bool):
        return str(x)
    return '%.10g' % x


def format_table(columns, rows):
    """Formats an ascii table for given columns and rows.

    Parameters
    ----------
    columns : list
        The column names
    rows : list of tuples
        The rows in the table. Each tuple must be the same length as
        ``columns``.
    """
    rows = [tuple(str(i) for i in r) for r in rows]
    columns = tuple(str(i).upper() for i in columns)
    if rows:
        widths = tuple(max(max(map(len, x)), len(c))
                       for x, c in zip(zip(*rows), columns))
    else:
        widths = tuple(map(len, columns))
    row_template = ('    '.join('%%-%ds' for _ in columns)) % widths
    header = (row_template % tuple(columns)).strip()
    if rows:
        data = '\n'.join((row_template % r).strip() for r in rows)
        return '\n'.join([header, data])
    else:
        return header


def format_csv(columns, rows):
    """Formats comma separated values for given columns and rows.

    Numbers are written with ``%.10g``, lines end with ``\\n``.

    Parameters
    ----------
    columns : list
        The column names, written verbatim as the header row.
    rows : list of tuples
        The rows in the table. Each tuple must be the same length as
        ``columns``.
    """
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n')
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_number(x) for x in row])
    return buf.getvalue()


def relative_difference(a, b):
    """``|a - b| / max(|a|, |b|)``, zero when both vanish."""
    scale = max(abs(a), abs(b))
    if scale == 0:
        return 0.0
    return abs(a - b) / scale


def is_finite_real(x):
    try:
        return math.isfinite(x) and not isinstance(x, (bool, complex))
    except TypeError:
        return False