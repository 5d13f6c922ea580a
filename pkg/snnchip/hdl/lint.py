"""
Verilog Lint
============

A textual structural check for emitted Verilog-2005. It catches the classic
mistakes of hand- or machine-written RTL without running an HDL tool:

- SystemVerilog-only keywords (``logic``, ``enum``, ``always_ff`` ...)
- 2-D or unpacked port declarations
- unbalanced ``begin``/``end``, ``module``/``endmodule``,
  ``generate``/``endgenerate``
- a ``reg`` assigned from more than one always block, from none, or by a
  continuous ``assign``
- a loop or genvar variable shared by more than one ``for`` loop, or
  declared twice

The scan expects one declaration per ``reg``/``integer``/``genvar`` statement
and always blocks whose body is a ``begin``/``end`` block, which is how the
emitter writes them.
"""

from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Set
import re

SYSTEMVERILOG_KEYWORDS = (
    "logic", "enum", "typedef", "struct", "union",
    "always_ff", "always_comb", "always_latch",
    "interface", "modport", "bit", "int", "byte", "shortint", "longint",
    "unique", "priority", "package", "import",
)

_LINE_COMMENT = re.compile(r"//[^\n]*")
_BLOCK_COMMENT = re.compile(r"/\*.*?\*/", re.DOTALL)
_WORD = re.compile(r"[A-Za-z_][A-Za-z0-9_$]*")
_MODULE = re.compile(r"\bmodule\b(.*?)\bendmodule\b", re.DOTALL)
_REG_DECL = re.compile(r"\breg\b\s*(?:\[[^\]]*\]\s*)?([A-Za-z_]\w*)")
_PORT_DECL = re.compile(
    r"\b(?:input|output|inout)\b\s*(?:wire|reg)?\s*((?:\[[^\]]*\]\s*)*)([A-Za-z_]\w*)\s*(\[)?"
)
_ASSIGNMENT = re.compile(r"([A-Za-z_]\w*)\s*(?:\[[^\]]*\]\s*)*<?=(?!=)")
_CONTINUOUS = re.compile(r"\bassign\s+([A-Za-z_]\w*)")
_FOR_VARIABLE = re.compile(r"\bfor\s*\(\s*([A-Za-z_]\w*)\s*=")
_LOOP_DECL = re.compile(r"\b(integer|genvar)\s+([A-Za-z_]\w*)")


@dataclass(frozen=True)
class LintIssue:
    """One rule violation; ``line`` is 1-based in the original text."""
    filename: str
    line: int
    rule: str
    message: str

    def __str__(self) -> str:
        return f"{self.filename}:{self.line}: [{self.rule}] {self.message}"


def strip_comments(text: str) -> str:
    """Blank out comments, keeping newlines so line numbers still match."""
    def blank(match: re.Match) -> str:
        return re.sub(r"[^\n]", " ", match.group())
    return _LINE_COMMENT.sub(blank, _BLOCK_COMMENT.sub(blank, text))


def _line_of(text: str, offset: int) -> int:
    return text.count("\n", 0, offset) + 1


def _always_blocks(code: str, start: int, end: int) -> List[str]:
    """Bodies of the always blocks between ``start`` and ``end``."""
    blocks = []
    for match in re.finditer(r"\balways\b", code[start:end]):
        depth = 0
        body_start = None
        for word in _WORD.finditer(code, start + match.end(), end):
            if word.group() == "begin":
                if body_start is None:
                    body_start = word.start()
                depth += 1
            elif word.group() == "end" and body_start is not None:
                depth -= 1
                if depth == 0:
                    blocks.append(code[body_start:word.end()])
                    break
    return blocks


def _check_balance(filename: str, code: str, opener: str, closer: str) -> List[LintIssue]:
    words = Counter(w.group() for w in _WORD.finditer(code))
    if words[opener] == words[closer]:
        return []
    return [LintIssue(filename, 1, "balance",
                      f"{words[opener]} '{opener}' against {words[closer]} '{closer}'")]


def _check_keywords(filename: str, code: str) -> List[LintIssue]:
    issues = []
    for word in _WORD.finditer(code):
        if word.group() in SYSTEMVERILOG_KEYWORDS:
            issues.append(LintIssue(filename, _line_of(code, word.start()), "systemverilog",
                                    f"SystemVerilog keyword '{word.group()}'"))
    return issues


def _check_ports(filename: str, code: str) -> List[LintIssue]:
    issues = []
    for port in _PORT_DECL.finditer(code):
        packed, name, unpacked = port.groups()
        if packed.count("[") > 1 or unpacked:
            issues.append(LintIssue(filename, _line_of(code, port.start()), "2d-port",
                                    f"port '{name}' is multi-dimensional"))
    return issues


def _check_module(filename: str, code: str, start: int, end: int) -> List[LintIssue]:
    issues = []
    body = code[start:end]
    line = _line_of(code, start)

    regs: Dict[str, int] = {}
    for decl in _REG_DECL.finditer(body):
        regs.setdefault(decl.group(1), _line_of(code, start + decl.start()))

    drivers: Dict[str, int] = Counter()
    for block in _always_blocks(code, start, end):
        assigned: Set[str] = {a.group(1) for a in _ASSIGNMENT.finditer(block)}
        for name in assigned & regs.keys():
            drivers[name] += 1
    for name, decl_line in regs.items():
        if drivers[name] != 1:
            issues.append(LintIssue(filename, decl_line, "single-driver",
                                    f"reg '{name}' is assigned in {drivers[name]} always blocks"))
    for cont in _CONTINUOUS.finditer(body):
        if cont.group(1) in regs:
            issues.append(LintIssue(filename, _line_of(code, start + cont.start()), "single-driver",
                                    f"reg '{cont.group(1)}' is driven by a continuous assign"))

    declared = Counter(d.group(2) for d in _LOOP_DECL.finditer(body))
    for name, count in declared.items():
        if count > 1:
            issues.append(LintIssue(filename, line, "loop-variable",
                                    f"'{name}' is declared {count} times"))
    loops = Counter(f.group(1) for f in _FOR_VARIABLE.finditer(body))
    for name, count in loops.items():
        if count > 1:
            issues.append(LintIssue(filename, line, "loop-variable",
                                    f"'{name}' drives {count} for loops"))
    return issues


def lint_verilog(filename: str, text: str) -> List[LintIssue]:
    """Run every rule over ``text``; an empty list means the file is clean."""
    code = strip_comments(text)
    issues = _check_keywords(filename, code)
    issues += _check_ports(filename, code)
    for opener, closer in (("begin", "end"), ("module", "endmodule"), ("generate", "endgenerate")):
        issues += _check_balance(filename, code, opener, closer)
    for module in _MODULE.finditer(code):
        issues += _check_module(filename, code, module.start(1), module.end(1))
    return issues
