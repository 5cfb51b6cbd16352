import os

from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile(
    "seedless", max_examples=150, deadline=None, derandomize=True,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("seedless" if os.environ.get("SHTAB_SEEDLESS") == "1" else "default")


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.EMITTED:
        terminalreporter.section("acceptance")
        for line in test_acceptance.EMITTED:
            terminalreporter.write_line(line)
