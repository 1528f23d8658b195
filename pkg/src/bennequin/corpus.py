"""Braid-word corpora and the batch verifier."""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from itertools import product

from .diagram import BraidWord, parse_braid
from .errors import InputError, ResourceCapError

__all__ = ["all_braids", "bundled_corpus_path", "read_corpus", "CorpusResult", "corpus_run", "CHECKS"]

CHECKS = ("mfw", "support", "sln")


def all_braids(max_strands: int, max_letters: int):
    """Every braid word on 1..max_strands strands with at most max_letters letters."""
    for strands in range(1, max_strands + 1):
        alphabet = [g for k in range(1, strands) for g in (k, -k)]
        for length in range(max_letters + 1):
            if length and not alphabet:
                break
            for word in product(alphabet, repeat=length):
                yield BraidWord(strands, word)


def bundled_corpus_path():
    return resources.files("bennequin") / "data" / "corpus_3x5.txt"


def read_corpus(text: str) -> list[tuple[int, str]]:
    """Non-comment, non-blank lines with their 1-based line numbers."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line))
    return out


@dataclass
class CorpusResult:
    rows: list[dict] = field(default_factory=list)
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    errors: int = 0

    @property
    def exit_code(self) -> int:
        if self.errors:
            return 2
        if self.failed:
            return 1
        return 0

    def to_json(self) -> dict:
        return {
            "summary": {
                "pass": self.passed,
                "fail": self.failed,
                "skipped": self.skipped,
                "errors": self.errors,
            },
            "rows": self.rows,
        }

    def table(self) -> str:
        lines = []
        for r in self.rows:
            if "error" in r:
                lines.append(f"{r['line']:>5}  {r['braid']:<28} ERROR {r['error']}")
                continue
            marks = " ".join(f"{k}={v}" for k, v in r["checks"].items())
            lines.append(f"{r['line']:>5}  {r['braid']:<28} {marks}")
        lines.append(
            f"pass={self.passed} fail={self.failed} skipped={self.skipped} errors={self.errors}"
        )
        return "\n".join(lines)


def _run_check(name: str, b: BraidWord, n: int, caps: dict) -> bool:
    from .bounds import verify_mfw, verify_support
    from .homfly import sln_vs_homfly_check

    if name == "mfw":
        return verify_mfw(b, caps.get("max_skein", 16))
    if name == "support":
        return verify_support(b, n, caps.get("max_crossings", 20), caps.get("max_dim", 4096)).holds
    if name == "sln":
        return sln_vs_homfly_check(b, n, max_crossings=caps.get("max_skein", 16), max_dim=caps.get("max_dim", 4096)).holds
    raise InputError(f"unknown check {name!r}; choose from {', '.join(CHECKS)}")


def corpus_run(text: str, checks=CHECKS, n: int = 2, caps: dict | None = None) -> CorpusResult:
    """Run the selected verifiers on every braid word, in input order."""
    caps = caps or {}
    for c in checks:
        if c not in CHECKS:
            raise InputError(f"unknown check {c!r}; choose from {', '.join(CHECKS)}")
    result = CorpusResult()
    for lineno, line in read_corpus(text):
        try:
            b = parse_braid(line)
        except InputError as exc:
            result.errors += 1
            result.rows.append({"line": lineno, "braid": line, "error": str(exc)})
            continue
        row = {"line": lineno, "braid": str(b), "checks": {}}
        for c in checks:
            try:
                ok = _run_check(c, b, n, caps)
            except ResourceCapError:
                row["checks"][c] = "skipped"
                result.skipped += 1
                continue
            row["checks"][c] = "pass" if ok else "fail"
            if ok:
                result.passed += 1
            else:
                result.failed += 1
        result.rows.append(row)
    return result
