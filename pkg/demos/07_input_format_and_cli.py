"""Reading the text format and driving the command line entry point."""

from pathlib import Path

from quiverhh import ParseError, export_dot, format_problem, parse_input
from quiverhh.cli import run

here = Path(__file__).parent
spec = parse_input((here / "square.quiver").read_text())
print(format_problem(spec))
print(export_dot(spec))

try:
    parse_input("vertex a b\narrow x a b\narrow y a b\nnilpotency 2\nrelation x*y\n")
except ParseError as exc:
    print("rejected:", exc)

for argv in (
    ["analyze", str(here / "square.quiver")],
    ["basis", str(here / "square.quiver"), "--which", "hh1"],
    ["basis", str(here / "kronecker.quiver"), "--which", "hh1"],
    ["faces", str(here / "kronecker.quiver")],
):
    print("\n$ quiverhh", " ".join(argv[:1] + [Path(argv[1]).name] + argv[2:]))
    print("exit", run(argv))
