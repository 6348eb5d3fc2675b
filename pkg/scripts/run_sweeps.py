"""Run the claim sweep over the bundled catalog and a cyclotomic hunt.

Writes the per-group TSV report, the verify summary and the hunt log into
an output directory:

    python scripts/run_sweeps.py --out results --qmax 1000000
"""
import argparse
import contextlib
import io
import logging
from pathlib import Path

from mcikit.cli import main as cli_main

ROOT = Path(__file__).resolve().parent.parent
CATALOG = ROOT / "data" / "catalog"

log = logging.getLogger("sweeps")


def capture(argv, path):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli_main(argv)
    path.write_text(buf.getvalue())
    log.info("%s -> %s (exit %d)", " ".join(argv[:1]), path, code)
    return code


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default="results")
    parser.add_argument("--qmax", type=int, default=10 ** 5)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    jobs = ["--jobs", str(args.jobs)]
    codes = [
        capture(["scan", str(CATALOG), *jobs], out / "scan.tsv"),
        capture(["verify", str(CATALOG), *jobs], out / "verify.txt"),
        capture(["hunt", str(args.qmax), "--log", str(out / "hunt_hits.log"),
                 "--checkpoint", str(out / "hunt.checkpoint")], out / "hunt.txt"),
    ]
    return max(codes)


if __name__ == "__main__":
    raise SystemExit(main())
