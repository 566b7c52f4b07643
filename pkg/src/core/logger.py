import logging
import logging.config

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
LOG_DEFAULT_HANDLERS = [
    'console',
]
# пакеты с долгими вычислениями: их '[+]'-сообщения включает --verbose
COMPUTATION_PACKAGES = ('arith', 'partitions', 'brackets', 'jacobi', 'quasimodular', 'structure', 'services', 'db')


LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {'format': LOG_FORMAT},
        'short': {'format': '%(levelname)s %(message)s'},
    },
    'handlers': {
        'console': {
            'level': 'DEBUG',
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
            'stream': 'ext://sys.stderr',
        },
        'cli': {
            'level': 'DEBUG',
            'class': 'logging.StreamHandler',
            'formatter': 'short',
            'stream': 'ext://sys.stderr',
        },
    },
    'loggers': {
        '': {
            'handlers': LOG_DEFAULT_HANDLERS,
            'level': 'WARNING',
        },
        'api': {
            'handlers': ['cli'],
            'level': 'WARNING',
            'propagate': False,
        },
        **{name: {'level': 'WARNING'} for name in COMPUTATION_PACKAGES},
    },
    'root': {
        'level': 'WARNING',
        'formatter': 'verbose',
        'handlers': LOG_DEFAULT_HANDLERS,
    },
}
logging.config.dictConfig(LOGGING)


def logger(_name_: str) -> logging.Logger:
    """Логгер."""
    return logging.getLogger(_name_)


def set_verbose(verbose: bool) -> None:
    """`--verbose`: DEBUG для вычислительных пакетов и команд."""
    level = logging.DEBUG if verbose else logging.WARNING
    for name in ('', 'api', *COMPUTATION_PACKAGES):
        logging.getLogger(name).setLevel(level)
