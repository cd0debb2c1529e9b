class ShodaError(Exception):
    pass


class GroupSizeError(ShodaError):
    """A configured enumeration or oracle cap was exceeded."""


class ParseError(ShodaError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)

    def at_line(self, line: int) -> "ParseError":
        return ParseError(self.message, line=line, column=self.column)
