"""Exception hierarchy shared by the simulator, CLI and service."""


class QRelayError(Exception):
    pass


class ConfigError(QRelayError, ValueError):
    """Invalid experiment or process configuration (CLI exit code 1)."""


class ReplayError(QRelayError):
    """A single-use entanglement link was used a second time."""

    def __init__(self, link_id: int):
        super().__init__(f"replay attempt: link {link_id} already consumed")
        self.link_id = link_id


class ExpiredLinkError(QRelayError):
    def __init__(self, link_id: int, age: float, window: float):
        super().__init__(f"link {link_id} expired: age {age:.3f} us exceeds window {window:.3f} us")
        self.link_id = link_id
        self.age = age
        self.window = window


class DistributionError(QRelayError, RuntimeError):
    """Entanglement distribution gave up after the attempt cap."""
