pytest_plugins = "lafair.src.testing"
