from typing import Optional
from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
	# Pydantic v2 configuration
	model_config = SettingsConfigDict(
		env_prefix="HYPERTRI_",
		env_file=".env",
		env_file_encoding='utf-8',
		case_sensitive=False,
		extra='ignore'  # unrelated HYPERTRI_* keys in .env are not errors
	)

	# Application Configuration
	app_name: str = "HyperTri"
	app_version: str = "1.0.0"

	# Logging configuration
	log_level: str = "INFO"
	log_file: Optional[str] = None

	# Fallback seed for every command that takes --seed (HYPERTRI_SEED)
	seed: int = 0

	# Estimator defaults
	default_tau: Optional[float] = None
	max_subsets: int = 10
	count_evicted: bool = False
	# htcount-p: keep feeding a lagging newest subset instead of weighted routing
	catch_up_routing: bool = False

	# Exact oracle guard against cubic blowups
	oracle_edge_cap: int = 10_000

	# Bench harness
	# 0 starts one worker per CPU
	trial_workers: int = 1
	# shared-vertex index per stream; skipped above this many vertex-pair incidences
	intersection_cache: bool = True
	intersection_cache_limit: int = 5_000_000
	snapshot_flush: bool = True

	@field_validator('default_tau', mode='before')
	@classmethod
	def empty_str_to_none(cls, v):
		if v == '':
			return None
		return v


def tau_for_budget(budget: int) -> float:
	"""
	Utilization threshold schedule keyed on the memory budget (vertex slots).
	Smaller budgets split less eagerly; large budgets tolerate almost no slack.

	:param budget: memory budget M in vertex slots
	:return: default tau for that budget
	"""
	if budget < 2 ** 12:
		return 0.85
	if budget < 2 ** 14:
		return 0.9
	if budget < 2 ** 16:
		return 0.95
	if budget < 2 ** 18:
		return 0.975
	return 0.99


settings = Settings()
