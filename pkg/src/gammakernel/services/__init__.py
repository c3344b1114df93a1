from .executor import ExecutorService
