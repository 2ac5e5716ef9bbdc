"""Shared buffer for acceptance verdicts, printed at the end of the pytest run."""

LINES: list[str] = []


def record(number: int, title: str, ok: bool, detail: str = "") -> str:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title}" + (f" ({detail})" if detail else "")
    LINES.append(line)
    print(line)
    return line
