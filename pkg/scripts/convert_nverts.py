"""
Convert the nverts/simplices dataset layout into one hyperedge per line.

  nverts file     one integer per line: the size of each hyperedge
  simplices file  the concatenated vertex ids of all hyperedges, one per line

Usage:
  python scripts/convert_nverts.py --nverts X-nverts.txt --simplices X-simplices.txt -o X.txt
"""
import argparse
import sys
from pathlib import Path
from typing import Iterator, TextIO


def _ints(path: Path) -> Iterator[int]:
    with open(path, "r", encoding="utf-8") as handle:
        for line_number, line in enumerate(handle, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                yield int(line)
            except ValueError:
                raise ValueError(f"{path}:{line_number}: not an integer: {line!r}")


def convert(nverts: Path, simplices: Path) -> Iterator[list[int]]:
    vertices = _ints(simplices)
    for index, size in enumerate(_ints(nverts), start=1):
        if size < 1:
            raise ValueError(f"hyperedge {index} has size {size}")
        members = [v for _, v in zip(range(size), vertices)]
        if len(members) < size:
            raise ValueError(f"simplices file ended inside hyperedge {index}")
        yield members
    if next(vertices, None) is not None:
        raise ValueError("simplices file has vertices past the last hyperedge")


def write_lines(edges: Iterator[list[int]], out: TextIO) -> int:
    count = 0
    for members in edges:
        out.write(" ".join(str(v) for v in members) + "\n")
        count += 1
    return count


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[1])
    parser.add_argument("--nverts", type=Path, required=True)
    parser.add_argument("--simplices", type=Path, required=True)
    parser.add_argument("-o", "--output", type=Path, default=None)
    args = parser.parse_args(argv)

    try:
        if args.output is None:
            count = write_lines(convert(args.nverts, args.simplices), sys.stdout)
        else:
            args.output.parent.mkdir(parents=True, exist_ok=True)
            with open(args.output, "w", encoding="utf-8") as out:
                count = write_lines(convert(args.nverts, args.simplices), out)
    except (OSError, ValueError) as e:
        sys.stderr.write(f"convert_nverts: {e}\n")
        return 2

    sys.stderr.write(f"wrote {count} hyperedges\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
