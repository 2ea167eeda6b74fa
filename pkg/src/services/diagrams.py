"""Coxeter diagram parsing, odd-edge class labeling and Coxeter words."""
import json
from collections import deque
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..config import config
from ..errors import DiagramSyntaxError, DiagramValidationError, PreconditionError
from ..models import INFINITY, ClassLabeling, CoxeterDiagram, CoxeterWord
from ..utils import setup_logger


logger = setup_logger(__name__, config.LOGS_DIR / "diagrams.log", config.LOG_LEVEL, config.LOG_TO_FILE)


BUILTIN_DIAGRAMS: Dict[str, str] = {
    "A2": "rank 2; m 1 2 3",
    "B2": "rank 2; m 1 2 4",
    "A1xA1": "rank 2",
    "I2(5)": "rank 2; m 1 2 5",
    "I2(6)": "rank 2; m 1 2 6",
    "I2(inf)": "rank 2; m 1 2 inf",
    "A3": "rank 3; m 1 2 3; m 2 3 3",
    "B3": "rank 3; m 1 2 3; m 2 3 4",
}


class DiagramParser:
    """Parser for the line-oriented diagram DSL and its JSON alternative.

    DSL::

        # comments run to the end of the line; ';' separates statements
        rank 3
        m 1 2 3
        m 2 3 inf

    JSON: ``{"rank": 3, "bonds": [[1, 2, 3], [2, 3, 0]]}`` or
    ``{"rank": 2, "matrix": [[1, 4], [4, 1]]}``; label 0 means infinity.
    """

    def parse(self, text: str) -> CoxeterDiagram:
        if text.lstrip().startswith("{"):
            return self.parse_json(text)
        return self.parse_dsl(text)

    # DSL ----------------------------------------------------------------

    @staticmethod
    def _statements(text: str) -> Iterable[Tuple[int, List[Tuple[str, int]]]]:
        """Yield (line, [(token, column)]) per statement."""
        for line_no, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0]
            tokens: List[Tuple[str, int]] = []
            column = 0
            for piece in line.split(";"):
                offset = 0
                for word in piece.split():
                    offset = piece.index(word, offset)
                    tokens.append((word, column + offset + 1))
                    offset += len(word)
                if tokens:
                    yield line_no, tokens
                tokens = []
                column += len(piece) + 1

    @staticmethod
    def _int(token: str, line: int, column: int, what: str) -> int:
        try:
            return int(token)
        except ValueError:
            raise DiagramSyntaxError(f"expected {what}, got {token!r}", line, column) from None

    def _label(self, token: str, line: int, column: int):
        if token.lower() in ("inf", "infinity", "∞"):
            return INFINITY
        value = self._int(token, line, column, "a label (integer >= 2 or 'inf')")
        if value < 2:
            raise DiagramValidationError(f"label {value} must be >= 2 or 'inf' (line {line}, column {column})")
        return value

    def parse_dsl(self, text: str) -> CoxeterDiagram:
        rank: Optional[int] = None
        bonds: List[Tuple[int, int, object]] = []
        last_line = 1
        for line, tokens in self._statements(text):
            last_line = line
            keyword, column = tokens[0]
            if keyword == "rank":
                if rank is not None:
                    raise DiagramSyntaxError("'rank' given more than once", line, column)
                if len(tokens) != 2:
                    raise DiagramSyntaxError("expected 'rank <n>'", line, column)
                rank = self._int(tokens[1][0], line, tokens[1][1], "a rank")
                if rank < 1:
                    raise DiagramValidationError(f"rank must be positive, got {rank}")
            elif keyword == "m":
                if rank is None:
                    raise DiagramSyntaxError("'m' before 'rank'", line, column)
                if len(tokens) != 4:
                    raise DiagramSyntaxError("expected 'm <i> <j> <label>'", line, column)
                i = self._int(tokens[1][0], line, tokens[1][1], "a generator index")
                j = self._int(tokens[2][0], line, tokens[2][1], "a generator index")
                bonds.append((i, j, self._label(tokens[3][0], line, tokens[3][1])))
            else:
                raise DiagramSyntaxError(f"unknown statement {keyword!r}", line, column)
        if rank is None:
            raise DiagramSyntaxError("missing 'rank <n>'", last_line, 1)
        diagram = CoxeterDiagram.from_bonds(rank, bonds)
        logger.debug(f"Parsed diagram of rank {rank} with {len(diagram.bonds())} bonds")
        return diagram

    # JSON ---------------------------------------------------------------

    @staticmethod
    def _json_label(value, where: str):
        if isinstance(value, bool) or not isinstance(value, int):
            raise DiagramValidationError(f"{where}: label {value!r} is not an integer")
        if value == 0:
            return INFINITY
        if value < 2:
            raise DiagramValidationError(f"{where}: label {value} must be >= 2 or 0 (infinity)")
        return value

    def parse_json(self, text: str) -> CoxeterDiagram:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise DiagramSyntaxError(e.msg, e.lineno, e.colno) from e
        return self.from_json(data)

    def from_json(self, data) -> CoxeterDiagram:
        if not isinstance(data, dict):
            raise DiagramValidationError("diagram JSON must be an object")
        if "matrix" in data:
            matrix = data["matrix"]
            if not isinstance(matrix, list) or not all(isinstance(row, list) for row in matrix):
                raise DiagramValidationError("'matrix' must be a list of rows")
            rank = data.get("rank", len(matrix))
            labels = tuple(
                tuple(
                    entry if r == c else self._json_label(entry, f"matrix[{r}][{c}]")
                    for c, entry in enumerate(row)
                )
                for r, row in enumerate(matrix)
            )
            return CoxeterDiagram(rank, labels)
        rank = data.get("rank")
        if isinstance(rank, bool) or not isinstance(rank, int):
            raise DiagramValidationError(f"'rank' must be an integer, got {rank!r}")
        raw_bonds = data.get("bonds", [])
        if not isinstance(raw_bonds, list):
            raise DiagramValidationError(f"'bonds' must be a list of [i, j, label], got {raw_bonds!r}")
        bonds = []
        for k, bond in enumerate(raw_bonds):
            if not isinstance(bond, list) or len(bond) != 3:
                raise DiagramValidationError(f"bonds[{k}] must be [i, j, label]")
            i, j, label = bond
            bonds.append((i, j, self._json_label(label, f"bonds[{k}]")))
        return CoxeterDiagram.from_bonds(rank, bonds)


def parse_diagram(text: str) -> CoxeterDiagram:
    """Parse DSL or JSON text into a validated diagram."""
    return DiagramParser().parse(text)


def builtin_diagram(name: str) -> CoxeterDiagram:
    try:
        return parse_diagram(BUILTIN_DIAGRAMS[name])
    except KeyError:
        raise PreconditionError(
            f"unknown built-in diagram {name!r}; known: {', '.join(BUILTIN_DIAGRAMS)}"
        ) from None


def _odd_neighbours(diagram: CoxeterDiagram, i: int) -> List[int]:
    return [
        j for j in range(1, diagram.rank + 1)
        if j != i and diagram.label(i, j) != INFINITY and diagram.label(i, j) % 2 == 1
    ]


def odd_components(diagram: CoxeterDiagram) -> ClassLabeling:
    """Class ids of simple reflections: components of the odd-labeled subgraph."""
    class_of = [0] * diagram.rank
    count = 0
    for start in range(1, diagram.rank + 1):
        if class_of[start - 1]:
            continue
        count += 1
        class_of[start - 1] = count
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in _odd_neighbours(diagram, i):
                if not class_of[j - 1]:
                    class_of[j - 1] = count
                    queue.append(j)
    return ClassLabeling(tuple(class_of), count)


def odd_path(diagram: CoxeterDiagram, source: int, target: int) -> List[int]:
    """Shortest odd-labeled path source, ..., target (neighbours in index order)."""
    parent: Dict[int, Optional[int]] = {source: None}
    queue = deque([source])
    while queue:
        i = queue.popleft()
        if i == target:
            break
        for j in _odd_neighbours(diagram, i):
            if j not in parent:
                parent[j] = i
                queue.append(j)
    if target not in parent:
        raise PreconditionError(f"s{source} and s{target} are not joined by odd-labeled edges")
    path = [target]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path[::-1]


def coxeter_word(diagram: CoxeterDiagram, permutation: Sequence[int]) -> CoxeterWord:
    """Letters s_pi(1) ... s_pi(n) for a bijection pi on 1..n."""
    letters = tuple(permutation)
    if any(isinstance(i, bool) or not isinstance(i, int) for i in letters) or (
        sorted(letters) != list(range(1, diagram.rank + 1))
    ):
        raise PreconditionError(f"{list(letters)} is not a permutation of 1..{diagram.rank}")
    return CoxeterWord(letters, diagram.rank)


def parabolic_coxeter_word(diagram: CoxeterDiagram, letters: Sequence[int]) -> CoxeterWord:
    """Coxeter word of the standard parabolic subgroup on the given distinct generators."""
    letters = tuple(letters)
    for i in letters:
        if isinstance(i, bool) or not isinstance(i, int) or not 1 <= i <= diagram.rank:
            raise PreconditionError(f"generator index {i!r} outside 1..{diagram.rank}")
    if len(set(letters)) != len(letters):
        raise PreconditionError(f"{list(letters)} repeats a generator")
    return CoxeterWord(letters, diagram.rank)
