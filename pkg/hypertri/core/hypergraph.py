from __future__ import annotations

import enum
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, NewType, Sequence

from .exceptions import ContractViolation

# Vertices are stored as 32-bit unsigned integers in the memory model.
VertexId = NewType("VertexId", int)
MAX_VERTEX_ID = 2 ** 32 - 1


@dataclass(frozen=True)
class Hyperedge:
	"""
	One stream element: an arrival-indexed set of distinct vertex ids.

	``vertices`` is kept sorted and duplicate free; ``vertex_set`` mirrors it
	for the intersection primitives below.
	"""
	arrival_index: int
	vertices: tuple[int, ...]
	vertex_set: frozenset[int] = field(init=False, repr=False, compare=False)

	def __post_init__(self):
		if self.arrival_index < 1:
			raise ContractViolation(f"arrival_index must be >= 1, got {self.arrival_index}")
		if not self.vertices:
			raise ContractViolation(f"hyperedge {self.arrival_index} has no vertices")
		previous = -1
		for v in self.vertices:
			if v <= previous:
				raise ContractViolation(f"hyperedge {self.arrival_index} vertices must be strictly increasing")
			previous = v
		if previous > MAX_VERTEX_ID:
			raise ContractViolation(f"vertex id {previous} does not fit in 32 bits")
		object.__setattr__(self, "vertex_set", frozenset(self.vertices))

	@classmethod
	def build(cls, arrival_index: int, vertices: Iterable[int]) -> "Hyperedge":
		"""Sort and deduplicate ``vertices`` before construction."""
		values = sorted(set(int(v) for v in vertices))
		if values and values[0] < 0:
			raise ContractViolation(f"vertex ids must be non-negative, got {values[0]}")
		return cls(arrival_index, tuple(values))

	def __len__(self) -> int:
		return len(self.vertices)


@dataclass(frozen=True)
class Hypergraph:
	edges: tuple[Hyperedge, ...] = ()

	def __post_init__(self):
		for position, edge in enumerate(self.edges, start=1):
			if edge.arrival_index != position:
				raise ContractViolation(
					f"edge at position {position} carries arrival_index {edge.arrival_index}"
				)

	@classmethod
	def from_vertex_sets(cls, vertex_sets: Iterable[Iterable[int]]) -> "Hypergraph":
		return cls(tuple(Hyperedge.build(i, vs) for i, vs in enumerate(vertex_sets, start=1)))

	def reindexed(self, order: Sequence[int]) -> "Hypergraph":
		"""Same vertex sets replayed in another arrival order (0-based positions)."""
		return Hypergraph.from_vertex_sets(self.edges[i].vertices for i in order)

	@property
	def total_slots(self) -> int:
		return sum(len(e) for e in self.edges)

	def __len__(self) -> int:
		return len(self.edges)

	def __iter__(self) -> Iterator[Hyperedge]:
		return iter(self.edges)


class PairKind(str, enum.Enum):
	disjoint = "disjoint"
	intersection = "intersection"
	inclusion = "inclusion"


@dataclass(frozen=True)
class PairInteraction:
	kind: PairKind
	shared: int


def intersection_size(a: Hyperedge, b: Hyperedge) -> int:
	return len(a.vertex_set & b.vertex_set)


def triple_intersection_size(a: Hyperedge, b: Hyperedge, c: Hyperedge) -> int:
	# intersect the two smallest first
	x, y, z = sorted((a, b, c), key=len)
	return len((x.vertex_set & y.vertex_set) & z.vertex_set)


def is_inclusion(shared: int, size_a: int, size_b: int) -> bool:
	return shared > 0 and shared == min(size_a, size_b)


def classify_pair(a: Hyperedge, b: Hyperedge) -> PairInteraction:
	"""Equal vertex sets classify as inclusion."""
	shared = intersection_size(a, b)
	if shared == 0:
		return PairInteraction(PairKind.disjoint, 0)
	if is_inclusion(shared, len(a), len(b)):
		return PairInteraction(PairKind.inclusion, shared)
	return PairInteraction(PairKind.intersection, shared)


NO_VERTICES: frozenset[int] = frozenset()


def shared_vertices(a: Hyperedge, b: Hyperedge) -> frozenset[int]:
	return a.vertex_set & b.vertex_set


class IntersectionIndex:
	"""
	Shared vertices of every intersecting pair of one stream, keyed by arrival
	index. Built once per stream and read by every estimator replaying it, so
	hyperedges passed in must come from that stream.
	"""

	def __init__(self, stream: Hypergraph):
		by_vertex: dict[int, list[int]] = defaultdict(list)
		for e in stream:
			for v in e.vertices:
				by_vertex[v].append(e.arrival_index)

		shared: dict[tuple[int, int], set[int]] = defaultdict(set)
		for v, arrivals in by_vertex.items():
			# arrivals are increasing, so keys come out as (earlier, later)
			for key in combinations(arrivals, 2):
				shared[key].add(v)

		partners: dict[int, set[int]] = defaultdict(set)
		for a, b in shared:
			partners[a].add(b)
			partners[b].add(a)
		self._shared = {key: frozenset(vs) for key, vs in shared.items()}
		self._partners = {a: frozenset(bs) for a, bs in partners.items()}

	@staticmethod
	def pair_volume(stream: Hypergraph) -> int:
		"""Vertex-pair incidences the index would store: sum of C(deg(v), 2)."""
		degree = Counter(v for e in stream for v in e.vertices)
		return sum(d * (d - 1) // 2 for d in degree.values())

	def __len__(self) -> int:
		return len(self._shared)

	def partners(self, e: Hyperedge) -> frozenset[int]:
		"""Arrival indexes of every hyperedge sharing a vertex with ``e``."""
		return self._partners.get(e.arrival_index, NO_VERTICES)

	def shared(self, a: Hyperedge, b: Hyperedge) -> frozenset[int]:
		i = a.arrival_index
		j = b.arrival_index
		if i == j:
			return a.vertex_set
		return self._shared.get((i, j) if i < j else (j, i), NO_VERTICES)


def binom3(n: int) -> int:
	if n < 3:
		return 0
	return n * (n - 1) * (n - 2) // 6


def falling_factorial(n: int, k: int) -> int:
	"""n (n-1) ... (n-k+1); 0 when n < k."""
	result = 1
	for i in range(k):
		result *= n - i
	return max(result, 0)
