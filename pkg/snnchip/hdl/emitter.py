"""
Verilog Emitter
===============

Collects the rendered Verilog files into an ``HdlBundle`` and writes them
to disk.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, List, Tuple, Union
import logging

from . import network, neuron, spi, top
from .lint import LintIssue, lint_verilog

logger = logging.getLogger(__name__)

# dependency order: each module instantiates only modules listed before it
_SOURCES = (neuron, network, spi, top)


@dataclass(frozen=True)
class HdlBundle:
    """Emitted Verilog as ordered ``(filename, text)`` pairs."""
    files: Tuple[Tuple[str, str], ...]

    def __iter__(self) -> Iterator[Tuple[str, str]]:
        return iter(self.files)

    def __len__(self) -> int:
        return len(self.files)

    def __getitem__(self, filename: str) -> str:
        for name, text in self.files:
            if name == filename:
                return text
        raise KeyError(filename)

    @property
    def filenames(self) -> List[str]:
        return [name for name, _ in self.files]

    def lint(self) -> List[LintIssue]:
        issues: List[LintIssue] = []
        for name, text in self.files:
            issues.extend(lint_verilog(name, text))
        return issues


def emit_verilog() -> HdlBundle:
    """Render every Verilog file of the design."""
    return HdlBundle(files=tuple((source.FILENAME, source.render()) for source in _SOURCES))


def write_bundle(bundle: HdlBundle, out_dir: Union[str, Path]) -> List[Path]:
    """Write each file as UTF-8 with LF line endings; returns the paths written."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    paths = []
    for name, text in bundle:
        path = out_dir / name
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        logger.info("wrote %s (%d bytes)", path, len(text.encode("utf-8")))
        paths.append(path)
    return paths
