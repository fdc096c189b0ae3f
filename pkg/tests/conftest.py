from hypothesis import HealthCheck, settings

settings.register_profile(
    "lenalg",
    derandomize=True,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
    deadline=None,
)
settings.load_profile("lenalg")
