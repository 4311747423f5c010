from hypothesis import HealthCheck, settings

# deterministic examples so two runs see the same inputs
settings.register_profile(
    "repro",
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repro")
