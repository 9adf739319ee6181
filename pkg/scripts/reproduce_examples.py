"""Print every semantics for the bundled instances, plus the reducts of the running example."""

from pathlib import Path

from adfsolve import Semantics, enumerate_semantics, grounded, parse_adf, reduct
from adfsolve.parsing import format_adf

INSTANCES = Path(__file__).resolve().parent.parent / "instances"


def fmt(v) -> str:
    return str(v) or "(empty)"


def show(path: Path) -> None:
    adf = parse_adf(path.read_text())
    print(f"== {path.name}")
    for sem in Semantics:
        found = enumerate_semantics(adf, sem)
        print(f"  {sem.value}: " + (" | ".join(map(fmt, found)) or "(none)"))
    for w in enumerate_semantics(adf, Semantics.MODEL):
        red = reduct(adf, w)
        print(f"  reduct at {fmt(w)}: grounded {fmt(grounded(red))}")
        for line in format_adf(red).splitlines():
            print(f"    {line}")


if __name__ == "__main__":
    for p in sorted(INSTANCES.glob("*.adf")):
        show(p)
