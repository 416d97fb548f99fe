from hypothesis import HealthCheck, settings

# exact arithmetic is slow per example; keep hypothesis off the clock
settings.register_profile(
    "exact", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("exact")
