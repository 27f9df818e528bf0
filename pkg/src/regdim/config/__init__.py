"""
Configuration for regdim.

Settings come from the environment (prefix ``REGDIM_``) and an optional
``.env`` file; named example ideals come from ``examples.yaml``.
"""
from regdim.config.settings import Settings, get_settings

__all__ = ['Settings', 'get_settings']
