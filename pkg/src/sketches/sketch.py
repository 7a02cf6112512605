"""
src/sketches/sketch.py
(m,n)-sketches: words over the letters a_i^s (value x_i + s) recording an m-Catalan region.
Input: letter sequences (or text like "a2^0 a3^0 a2^1 a1^0 a3^1 a1^1")
Output: validated, immutable Sketch objects with an O(1) position lookup
"""

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, NamedTuple, Tuple


class Letter(NamedTuple):
    index: int
    level: int

    def render(self) -> str:
        return f"a{self.index}^{self.level}"


class SketchError(ValueError):
    """Word failing one of the three sketch conditions."""


class MissingLetterError(SketchError):
    """Letters missing, duplicated or out of range."""


class LevelOrderError(SketchError):
    """Some a_i^{s-1} appears after a_i^s."""


class ShuffleOrderError(SketchError):
    """Level order of indices is not repeated from one level to the next."""


class BoundMismatchError(ValueError):
    """Sketch level bound differs from the arrangement's bound m."""


@dataclass(frozen=True)
class Sketch:
    word: Tuple[Letter, ...]
    m: int = field(compare=False)
    n: int = field(compare=False)

    @cached_property
    def position(self) -> Dict[Letter, int]:
        return {letter: r for r, letter in enumerate(self.word)}

    def before(self, a: Letter, b: Letter) -> bool:
        """a <_w b."""
        pos = self.position
        return pos[a] < pos[b]

    def render(self) -> str:
        return render_sketch(self)

    def __str__(self) -> str:
        return self.render()

    def __len__(self) -> int:
        return len(self.word)


def render_sketch(w: Sketch) -> str:
    return " ".join(letter.render() for letter in w.word)


RE_LETTER = re.compile(r"^a(\d+)\^(\d+)$")


def parse_sketch(text: str, m: int, n: int) -> Sketch:
    letters = []
    for token in text.split():
        match = RE_LETTER.match(token)
        if not match:
            raise SketchError(f"cannot read letter {token!r} (expected a<i>^<s>)")
        letters.append(Letter(int(match.group(1)), int(match.group(2))))
    return validate_sketch(letters, m, n)


def validate_sketch(word: Iterable, m: int, n: int) -> Sketch:
    letters = tuple(Letter(*letter) for letter in word)
    expected = {Letter(i, s) for i in range(1, n + 1) for s in range(m + 1)}

    seen = set()
    for letter in letters:
        if letter not in expected:
            raise MissingLetterError(f"letter {letter.render()} is outside i in [1;{n}], s in [0;{m}]")
        if letter in seen:
            raise MissingLetterError(f"letter {letter.render()} appears twice")
        seen.add(letter)
    missing = sorted(expected - seen)
    if missing:
        raise MissingLetterError("missing letters: " + " ".join(x.render() for x in missing))

    pos = {letter: r for r, letter in enumerate(letters)}
    for i in range(1, n + 1):
        for s in range(1, m + 1):
            if pos[(i, s - 1)] > pos[(i, s)]:
                raise LevelOrderError(f"a{i}^{s - 1} must appear before a{i}^{s}")

    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            for s in range(1, m + 1):
                for t in range(1, m + 1):
                    if pos[(i, s - 1)] < pos[(j, t - 1)] and not pos[(i, s)] < pos[(j, t)]:
                        raise ShuffleOrderError(
                            f"a{i}^{s - 1} precedes a{j}^{t - 1} but a{i}^{s} does not precede a{j}^{t}"
                        )

    return Sketch(letters, m, n)


def check_bound(w: Sketch, m: int) -> None:
    if w.m != m:
        raise BoundMismatchError(f"sketch has levels [0;{w.m}] but the arrangement needs [0;{m}]")
