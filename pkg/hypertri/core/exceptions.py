class HyperTriError(Exception):
	"""Base class for every error this package raises on purpose."""


class StreamParseError(HyperTriError):
	"""Malformed input line. Carries the 1-based line number."""

	def __init__(self, line_number: int, message: str):
		self.line_number = line_number
		super().__init__(f"line {line_number}: {message}")


class ConfigError(HyperTriError, ValueError):
	pass


class ContractViolation(HyperTriError, ValueError):
	"""A caller broke an operation's precondition (arity, budget, ordering)."""


class OracleLimitError(HyperTriError):
	def __init__(self, edges: int, cap: int):
		self.edges = edges
		self.cap = cap
		super().__init__(f"exact counting refused: {edges} edges exceeds cap of {cap}")
