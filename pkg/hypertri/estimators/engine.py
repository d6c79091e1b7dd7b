"""
Shared triangle update loop.

Every estimator calls :func:`update_triangles` with the hyperedge it just
admitted and a view over the rest of its sample. Each triangle configuration
is counted once, when the last of its hyperedges is admitted, and weighted by
the inverse probability that all of its hyperedges are sampled together.
"""
from dataclasses import dataclass
from typing import Optional, Protocol, Sequence

from ..core.hypergraph import Hyperedge, IntersectionIndex, is_inclusion, shared_vertices
from ..schemas.estimates import TriangleEstimates

# (hyperedge, subset tag); tags are 1-based subset indexes
SampleView = Sequence[tuple[Hyperedge, int]]


class CorrectionProvider(Protocol):
	def pair_factor(self, tag_i: int, tag_j: int) -> float: ...

	def triple_factor(self, tag_i: int, tag_j: int, tag_k: int) -> float: ...


@dataclass(frozen=True)
class UnitCorrections:
	"""All factors 1: every configuration counted at face value."""

	def pair_factor(self, tag_i: int, tag_j: int) -> float:
		return 1.0

	def triple_factor(self, tag_i: int, tag_j: int, tag_k: int) -> float:
		return 1.0


def hybrid_contribution(e_i: Hyperedge, e_j: Hyperedge, i_ij: int) -> int:
	# 2-subsets of the shared region times vertices exclusive to one edge
	return (len(e_i) + len(e_j) - 2 * i_ij) * i_ij * (i_ij - 1) // 2


def outer_contribution(i_ij: int, i_ik: int, i_jk: int, i_triple: int) -> int:
	return (i_ij - i_triple) * (i_ik - i_triple) * (i_jk - i_triple)


def update_triangles(
		e: Hyperedge,
		view: SampleView,
		corrections: CorrectionProvider,
		est: TriangleEstimates,
		tag: int = 1,
		intersections: Optional[IntersectionIndex] = None,
) -> TriangleEstimates:
	"""
	Add the hybrid, outer and hyper-edge class configurations closed by ``e``.

	:param e: hyperedge just admitted to the sample
	:param view: every other sampled hyperedge with its subset tag; must not contain ``e``
	:param corrections: supplies theta per pair and gamma per triple
	:param est: accumulators, updated in place
	:param tag: subset tag of ``e``
	:param intersections: precomputed shared vertices of the stream ``e`` belongs to
	:return: ``est``
	"""
	e_size = len(e)

	if intersections is None:
		shared_with = shared_vertices
		neighbours = []
		for e_j, tag_j in view:
			s_ij = shared_with(e, e_j)
			if s_ij:
				neighbours.append((e_j, tag_j, s_ij))
	else:
		partners = intersections.partners(e)
		if not partners:
			return est
		shared_with = intersections.shared
		neighbours = [
			(e_j, tag_j, shared_with(e, e_j))
			for e_j, tag_j in view
			if e_j.arrival_index in partners
		]

	hybrid = 0.0
	outer = 0.0
	classes = [0.0, 0.0, 0.0, 0.0]

	for j, (e_j, tag_j, s_ij) in enumerate(neighbours):
		i_ij = len(s_ij)
		size_j = len(e_j)
		pairs = hybrid_contribution(e, e_j, i_ij)
		if pairs:
			hybrid += pairs * corrections.pair_factor(tag, tag_j)

		incl_ij = is_inclusion(i_ij, e_size, size_j)
		for e_k, tag_k, s_ik in neighbours[j + 1:]:
			i_jk = len(shared_with(e_j, e_k))
			if not i_jk:
				continue
			gamma = corrections.triple_factor(tag, tag_j, tag_k)
			# e ∩ e_j ∩ e_k
			i_triple = len(s_ij & s_ik)
			i_ik = len(s_ik)
			outer += outer_contribution(i_ij, i_ik, i_jk, i_triple) * gamma

			size_k = len(e_k)
			inclusions = incl_ij + is_inclusion(i_ik, e_size, size_k) + is_inclusion(i_jk, size_j, size_k)
			classes[inclusions] += gamma

	est.hybrid += hybrid
	est.outer += outer
	est.ttt += classes[0]
	est.ttc += classes[1]
	est.tcc += classes[2]
	est.ccc += classes[3]
	return est
