from typing import FrozenSet, Tuple


OnticTuple = Tuple[int, ...]
RelationPair = Tuple[OnticTuple, OnticTuple]
EdgeType = Tuple[str, str]
EpistemicState = FrozenSet[int]

