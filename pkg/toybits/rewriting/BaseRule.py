from abc import abstractmethod
from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple
from ..constants import COLOURS, GREEN, RED
from ..Diagram import Diagram, Node
from ..DiagramEditor import DiagramEditor
from ..diagram_operations import assert_valid, dagger
from ..hashing import diagram_hash


@dataclass(frozen=True)
class Match:
    """Where and how a rule applies to one particular diagram.

    Attributes
    ----------
    rule:
        Label of the rule that produced the match.
    nodes:
        Diagram nodes covered by the left-hand side.
    params:
        Extra choices of the match (phase of a new node, chosen leg, ...), as sorted pairs.
    diagram_hash:
        Hash of the diagram the match was found in.
    """
    rule: str
    nodes: Tuple[str, ...]
    params: Tuple[Tuple[str, object], ...]
    diagram_hash: str

    def param(self, name: str, default=None):
        return dict(self.params).get(name, default)


def schema(nodes: Dict[str, Node], internal: Iterable[Tuple[str, str]], legs: Iterable[str]) -> Diagram:
    """Rule pattern whose open legs become the boundary.

    The first half of the legs (rounded down) become inputs, the rest outputs.
    """
    legs = list(legs)
    n_inputs = len(legs) // 2
    edges = list(internal)
    for k, node_id in enumerate(legs):
        slot = f"in{k}" if k < n_inputs else f"out{k - n_inputs}"
        edges.append((node_id, slot))
    return Diagram(nodes, edges, n_inputs, len(legs) - n_inputs)


class BaseRule:
    """Rewrite rule base class.

    A rule is registered for one colour and one direction. ``reverse`` selects
    the right-to-left direction; ``upside_down`` selects the flipped rule. As
    diagrams carry no orientation, the flipped rule rewrites exactly like the
    original; only its soundness instances are flipped.

    Subclasses implement matching and rewriting for both directions and provide
    left-hand side instances of the forward direction.
    """
    name = "base"

    def __init__(self, colour: str = GREEN, reverse: bool = False, upside_down: bool = False):
        assert colour in COLOURS, f"Expected colour {GREEN} or {RED}, got {colour!r}."
        self.colour = colour
        self.other = RED if colour == GREEN else GREEN
        self.reverse = reverse
        self.upside_down = upside_down

    @property
    def label(self) -> str:
        label = f"{self.name}[{self.colour}]"
        if self.reverse:
            label += "-reverse"
        if self.upside_down:
            label += "-upside_down"
        return label

    def __repr__(self):
        return f"{type(self).__name__}(colour={self.colour!r}, reverse={self.reverse}, upside_down={self.upside_down})"

    def find_matches(self, diagram: Diagram) -> List[Match]:
        """All places where the rule applies, in a deterministic order."""
        assert_valid(diagram)
        found = self._backward_matches(diagram) if self.reverse else self._forward_matches(diagram)
        signature = diagram_hash(diagram)
        return [Match(self.label, tuple(nodes), tuple(sorted(params.items())), signature)
                for nodes, params in found]

    def apply(self, diagram: Diagram, match: Match) -> Diagram:
        """Rewrite the matched part of the diagram; the boundary is unchanged."""
        if match.rule != self.label:
            raise ValueError(f"Match of rule {match.rule} cannot be applied with rule {self.label}.")
        if match.diagram_hash != diagram_hash(diagram):
            raise ValueError("Stale match: the diagram changed since the match was found.")
        editor = DiagramEditor(diagram)
        if self.reverse:
            self._rewrite_backward(editor, match)
        else:
            self._rewrite_forward(editor, match)
        return editor.to_diagram()

    def instances(self, max_legs: int = 3) -> List[Diagram]:
        """Diagrams the rule is checked on: left-hand sides of this direction."""
        patterns = self.schema_instances(max_legs)
        if self.reverse:
            forward = type(self)(self.colour)
            patterns = [forward.apply(pattern, match)
                        for pattern in patterns for match in forward.find_matches(pattern)]
        if self.upside_down:
            patterns = [dagger(pattern) for pattern in patterns]
        return patterns

    @abstractmethod
    def schema_instances(self, max_legs: int) -> List[Diagram]:
        """Instances of the forward left-hand side with up to ``max_legs`` open legs per spider."""
        raise NotImplementedError

    @abstractmethod
    def _forward_matches(self, diagram: Diagram) -> List[Tuple[Tuple[str, ...], dict]]:
        raise NotImplementedError

    @abstractmethod
    def _rewrite_forward(self, editor: DiagramEditor, match: Match):
        raise NotImplementedError

    def _backward_matches(self, diagram: Diagram) -> List[Tuple[Tuple[str, ...], dict]]:
        return self._forward_matches(diagram)

    def _rewrite_backward(self, editor: DiagramEditor, match: Match):
        self._rewrite_forward(editor, match)

    def is_spider(self, diagram: Diagram, node_id: str, colour: str = None) -> bool:
        node = diagram.nodes.get(node_id)
        return node is not None and node.kind == (colour or self.colour)


def spider_ids(diagram: Diagram, colour: str) -> List[str]:
    return sorted(node_id for node_id, node in diagram.nodes.items() if node.kind == colour)


def is_phase_shift(diagram: Diagram, node_id: str, colour: str) -> bool:
    """Spider of the given colour with exactly two non-loop legs."""
    node = diagram.nodes.get(node_id)
    return node is not None and node.kind == colour and diagram.degree(node_id) == 2 \
        and diagram.self_loops(node_id) == 0
