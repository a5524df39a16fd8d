"""Reading and writing tab-separated complex word identification instances.

One instance per line, tab-separated::

    sentence<TAB>word<TAB>offset[<TAB>label]

The sentence is pre-tokenized with single spaces; ``offset`` is the zero-based
index of the target among the whitespace tokens.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Tuple

from .errors import (
    BadLabel,
    DataError,
    EmptyDataset,
    MalformedLine,
    OffsetOutOfRange,
    TokenMismatch,
)


@dataclass(frozen=True)
class Instance:
    tokens: Tuple[str, ...]
    target_word: str
    offset: int
    label: Optional[int] = None

    def __post_init__(self):
        if not 0 <= self.offset < len(self.tokens):
            raise OffsetOutOfRange(
                f"offset {self.offset} outside sentence of {len(self.tokens)} tokens"
            )
        if self.tokens[self.offset] != self.target_word:
            raise TokenMismatch(
                f"token {self.offset} is {self.tokens[self.offset]!r}, "
                f"not target {self.target_word!r}"
            )
        if self.label is not None and self.label not in (0, 1):
            raise BadLabel(f"label must be 0 or 1, got {self.label!r}")

    @property
    def sentence(self) -> str:
        return " ".join(self.tokens)

    def to_line(self) -> str:
        fields = [self.sentence, self.target_word, str(self.offset)]
        if self.label is not None:
            fields.append(str(self.label))
        return "\t".join(fields)


@dataclass(frozen=True)
class Dataset:
    instances: Tuple[Instance, ...]
    labeled: bool

    def __post_init__(self):
        for inst in self.instances:
            if (inst.label is not None) != self.labeled:
                state = "labeled" if self.labeled else "unlabeled"
                raise BadLabel(f"instance label presence disagrees with {state} dataset")

    def __len__(self):
        return len(self.instances)

    def __iter__(self):
        return iter(self.instances)

    def __getitem__(self, i):
        return self.instances[i]

    @property
    def labels(self):
        return [inst.label for inst in self.instances]


def parse_instance(line: str, labeled: bool) -> Instance:
    """Parse one tab-separated instance line.

    Raises MalformedLine on a wrong field count or a non-integer offset, and
    the Instance validation errors (OffsetOutOfRange, TokenMismatch, BadLabel)
    otherwise.
    """
    fields = line.rstrip("\r\n").split("\t")
    expected = 4 if labeled else 3
    if len(fields) != expected:
        raise MalformedLine(
            f"expected {expected} tab-separated fields, found {len(fields)}"
        )
    sentence, word, raw_offset = fields[:3]
    try:
        offset = int(raw_offset)
    except ValueError:
        raise MalformedLine(f"offset {raw_offset!r} is not an integer") from None
    if offset < 0:
        raise OffsetOutOfRange(f"offset {offset} is negative")
    label = None
    if labeled:
        raw_label = fields[3].strip()
        if raw_label not in ("0", "1"):
            raise BadLabel(f"label must be 0 or 1, got {raw_label!r}")
        label = int(raw_label)
    return Instance(tuple(sentence.split()), word, offset, label)


def iter_instances(path, labeled: bool) -> Iterator[Tuple[int, str, Instance]]:
    """Yield ``(lineno, raw_line, instance)`` for each non-blank line.

    Errors are re-raised annotated with the file name and 1-based line number.
    """
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, start=1):
            raw = line.rstrip("\r\n")
            if not raw.strip():
                continue
            try:
                inst = parse_instance(raw, labeled)
            except DataError as err:
                raise err.at(path=str(path), lineno=lineno) from None
            yield lineno, raw, inst


def load_dataset(path, labeled: bool) -> Dataset:
    instances = tuple(inst for _, _, inst in iter_instances(path, labeled))
    if not instances:
        raise EmptyDataset("no instances", path=str(path))
    return Dataset(instances, labeled)


def write_dataset(instances: Sequence[Instance], path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        for inst in instances:
            f.write(inst.to_line() + "\n")


def format_prediction(raw_line: str, label: int, probability: float) -> str:
    """Append the predicted label and complex-class probability to an input line."""
    return f"{raw_line}\t{label}\t{probability:.6f}"
