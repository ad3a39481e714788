"""rackhom: exact (co)homology of finite racks and quandles."""

__version__ = "0.1.0"
