"""Attribute-style records for lexicon entities.

Every entity (frame, frame element, lexical unit, relation, semantic type,
sentence, annotation set, document) is a ``Record``: a dict whose keys double
as attributes, tagged with an entity kind under ``_type``.  Keys enumerate in
insertion order and the constructors in the rest of the package always insert
in a fixed canonical order, so the attribute listing of a given entity kind is
stable across calls and processes.

Values that are expensive to obtain (exemplar sentences, cross-file
references) are stored as ``Lazy`` thunks.  The thunk is resolved on first
read and the resolved value is written back, so repeated reads return the
identical object.
"""

# Closed set of entity kind tags.
ENTITY_KINDS = frozenset(
    [
        "frame",
        "fe",
        "lu",
        "framerelation",
        "ferelation",
        "framerelationtype",
        "semtype",
        "sentence",
        "annotationset",
        "fulltext_sentence",
        "document",
    ]
)


class Lazy:
    """A deferred value: a zero-argument callable evaluated at most once."""

    __slots__ = ("_thunk", "_value", "_done")

    def __init__(self, thunk):
        self._thunk = thunk
        self._value = None
        self._done = False

    def resolve(self):
        if not self._done:
            self._value = self._thunk()
            self._done = True
            self._thunk = None
        return self._value


def unbound_lazy(what):
    """A Lazy that fails loudly: used by parsers that have no data source."""

    def _raise():
        from .errors import CorpusError

        raise CorpusError(f"no data source attached; cannot resolve {what}")

    return Lazy(_raise)


class Record(dict):
    """Dict with attribute access, a kind tag, and transparent lazy values."""

    def __getitem__(self, key):
        value = dict.__getitem__(self, key)
        if isinstance(value, Lazy):
            value = value.resolve()
            dict.__setitem__(self, key, value)
        return value

    def get(self, key, default=None):
        try:
            return self[key]
        except KeyError:
            return default

    def __getattr__(self, name):
        if name.startswith("__"):
            raise AttributeError(name)
        try:
            return self[name]
        except KeyError:
            raise AttributeError(name) from None

    def __setattr__(self, name, value):
        self[name] = value

    def __repr__(self):
        kind = dict.get(self, "_type", "record")
        bits = [f"<{kind}"]
        for key in ("ID", "name"):
            value = dict.get(self, key)
            if value is not None and not isinstance(value, Lazy):
                bits.append(f"{key}={value}")
        return " ".join(bits) + ">"

    # dict defines no __str__ of its own, so align it with repr.
    __str__ = __repr__


def attribute_names(entity):
    """The entity's attribute names, in its stable enumeration order."""
    return [key for key in entity.keys() if not key.startswith("_")]


def record_type(entity):
    """The entity's kind tag (one of ENTITY_KINDS)."""
    return entity["_type"]
