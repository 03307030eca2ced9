"""Scenario and atlas files bundled with pseudodyn.

Load them by name with `pseudodyn.scenario.load_bundled` and
`pseudodyn.scenario.load_atlas`.
"""
