"""gnuplot scripts for experiment outputs. They are written, never run."""

from typing import Optional

PREAMBLE = """\
# gnuplot script; run with: gnuplot -p {name}
set datafile separator ','
set datafile commentschars '#'
"""


def _preamble(name: str) -> str:
    return PREAMBLE.format(name=name)


def spacetime_script(name: str, grids: list[str], envelope: Optional[str]) -> str:
    """Space-time heat maps, one panel per grid file, with an optional overlay."""
    lines = [
        _preamble(name),
        "set xlabel 'time'",
        "set ylabel 'cavity Q'",
        "set cblabel 'occupation'",
        f"set multiplot layout {len(grids)},1",
    ]
    for index, grid in enumerate(grids, start=2):
        lines.append(f"set title '{grid}'")
        plot = f"plot '{grid}' matrix rowheaders columnheaders using 2:1:3 with image notitle"
        if envelope:
            plot += f", '{envelope}' using 1:{index} with lines dt 2 lc 'white' notitle"
        lines.append(plot)
    lines.append("unset multiplot")
    return "\n".join(lines) + "\n"


def dispersion_script(name: str, table: str) -> str:
    """Delta Q against kappa/beta on a log axis, with the Heisenberg references."""
    return "\n".join(
        [
            _preamble(name),
            "set logscale x",
            "set xlabel 'kappa/beta'",
            "set ylabel 'Delta Q'",
            f"plot '{table}' using 1:2 with lines title 'photonic', \\",
            "     '' using 1:3 with lines dt 2 title 'atomic', \\",
            "     '' using 1:4 with lines dt 4 title 'Heisenberg J = kappa', \\",
            "     '' using 1:5 with lines dt 3 title 'Heisenberg J = 2 kappa'",
        ]
    ) + "\n"


def profiles_script(name: str, table: str, columns: list[str]) -> str:
    """Occupation against cavity, one curve block per snapshot time."""
    plots = [
        f"'{table}' using 2:{index} with linespoints title '{column}'"
        for index, column in enumerate(columns, start=3)
    ]
    return "\n".join(
        [
            _preamble(name),
            "set xlabel 'cavity Q'",
            "set ylabel 'occupation'",
            "plot " + ", ".join(plots),
        ]
    ) + "\n"


def position_script(name: str, table: str) -> str:
    """<Q>(t) and Delta Q(t) with the analytic envelope."""
    return "\n".join(
        [
            _preamble(name),
            "set xlabel 'time'",
            f"plot '{table}' using 1:2 with lines title '<Q>', \\",
            "     '' using 1:3 with lines dt 2 title 'Delta Q', \\",
            "     '' using 1:4 with lines dt 3 title 'envelope'",
        ]
    ) + "\n"
