from hypothesis import HealthCheck, settings

settings.register_profile(
    "ssderiv",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ssderiv")
