import logging

import uvicorn

from .app import create_app
from .config import HOST, PORT
from .utils import configure_logging


def run(host: str = HOST, port: int = PORT, auth_token: str | None = None) -> None:
    configure_logging()
    app = create_app(auth_token)
    logging.info("serve host=%s port=%d", host, port)
    uvicorn.run(app, host=host, port=port, log_config=None)
