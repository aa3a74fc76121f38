"""The user-facing query surface over an open corpus store.

One FrameLexicon wraps one Store.  Name lookups take regular expression
patterns with unanchored search semantics (embed ``(?i)`` for case
insensitivity); exact-match lookups take a name or numeric ID and raise
LookupFailure when nothing matches.  All list results have fixed orders.
"""

from .corpus import CorpusMixin, compile_pattern
from .errors import LookupFailure
from .records import Record
from .relations import RelationsMixin
from .store import open_store


class FrameLexicon(RelationsMixin, CorpusMixin):
    def __init__(self, store):
        self._store = store

    @classmethod
    def open(cls, root=None):
        """Open a corpus directory (default: the FRAMELEX_DATA variable)."""
        return cls(open_store(root))

    @property
    def store(self):
        return self._store

    # ------------------------------------------------------------ frames

    def frames(self, name_pattern=None):
        """Frames whose name matches the pattern (all frames if None), ID ascending."""
        entries = self._store.frame_index()
        if name_pattern is not None:
            rx = compile_pattern(name_pattern)
            entries = [(fid, name) for fid, name in entries if rx.search(name)]
        return [self._store.get_frame(fid) for fid, _ in sorted(entries)]

    def frame(self, key):
        """One frame, by exact name or numeric ID."""
        if isinstance(key, Record) and key.get("_type") == "frame":
            return key
        if isinstance(key, str) and key.isdigit():
            key = int(key)
        return self._store.get_frame(key)

    def frame_ids_and_names(self, name_pattern=None):
        """{frame ID: frame name} for matching frames, from the index alone."""
        entries = self._store.frame_index()
        if name_pattern is not None:
            rx = compile_pattern(name_pattern)
            entries = [(fid, name) for fid, name in entries if rx.search(name)]
        return dict(sorted(entries))

    def frames_by_lemma(self, pattern):
        """Frames defining at least one LU whose name matches, ID ascending."""
        frame_ids = {row.frameID for row in self._lu_rows(pattern)}
        return [self._store.get_frame(fid) for fid in sorted(frame_ids)]

    # ------------------------------------------------------------ lexical units

    def lus(self, name_pattern=None, frame=None):
        """Lexical units whose name matches, LU ID ascending.

        ``frame`` confines the result to one or more frames: a numeric ID, a
        frame record, an exact frame name, or a name pattern (a restriction
        matching no frame yields an empty list, not an error).
        """
        rows = self._lu_rows(name_pattern)
        if frame is not None:
            allowed = self._frame_restriction_ids(frame)
            rows = [row for row in rows if row.frameID in allowed]
        return [self._store.get_lu(row.ID) for row in rows]

    def lu(self, lu_id):
        """One lexical unit, by numeric ID."""
        if isinstance(lu_id, Record) and lu_id.get("_type") == "lu":
            return lu_id
        if isinstance(lu_id, str) and lu_id.isdigit():
            lu_id = int(lu_id)
        if not isinstance(lu_id, int):
            raise LookupFailure(f"no lexical unit with ID {lu_id!r}")
        return self._store.get_lu(lu_id)

    def _frame_restriction_ids(self, frame):
        if isinstance(frame, Record) and frame.get("_type") == "frame":
            return {frame["ID"]}
        if isinstance(frame, int):
            return {frame}
        allowed = set()
        rx = compile_pattern(frame)
        for fid, name in self._store.frame_index():
            if name == frame or rx.search(name):
                allowed.add(fid)
        return allowed

    # ------------------------------------------------------------ frame elements

    def fes(self, name_pattern=None, frame=None):
        """Frame elements whose name matches, by (frame ID, FE ID).

        Scans every frame unless ``frame`` confines the search, loading the
        scanned frames as a side effect.
        """
        if frame is None:
            frame_ids = sorted(fid for fid, _ in self._store.frame_index())
        else:
            frame_ids = sorted(self._frame_restriction_ids(frame))
        rx = compile_pattern(name_pattern) if name_pattern is not None else None
        found = []
        for fid in frame_ids:
            if not self._store.frame_defined(fid):
                continue
            fes = self._store.get_frame(fid)["FE"].values()
            found.extend(
                fe
                for fe in sorted(fes, key=lambda fe: fe["ID"])
                if rx is None or rx.search(fe["name"])
            )
        return found

    # ------------------------------------------------------------ help

    def help_summary(self):
        """A one-line-per-operation summary of the query surface."""
        return HELP_TEXT


HELP_TEXT = """\
Queries over a FrameNet-1.7-format lexical database.  Patterns are regular
expressions with unanchored search semantics; embed (?i) to ignore case.

Frames:
  frames(pattern)                frames whose name matches, ID ascending
  frame(name_or_id)              one frame, by exact name or numeric ID
  frame_ids_and_names(pattern)   {frame ID: name}, from the index alone
  frames_by_lemma(pattern)       frames defining an LU whose name matches
Lexical units:
  lus(pattern, frame)            lexical units by name, optionally per frame
  lu(id)                         one lexical unit, by numeric ID
Frame elements:
  fes(pattern, frame)            frame elements by name, across frames
Relations and semantic types:
  frame_relations(frame, frame2, type)  frame-to-frame relations, filtered
  frame_relation_types()         the relation type registry
  fe_relations()                 every FE-to-FE mapping in the registry
  semtypes()                     all semantic types, ID ascending
  semtype(key)                   one semantic type, by name, abbrev, or ID
  semtype_inherits(st, ancestor) hierarchy reachability (reflexive)
  propagate_semtypes()           push FE semantic types down the mappings
Annotated sentences:
  annotations(pattern, exemplars=, full_text=)  frame annotation sets
  exemplars(pattern)             lexicographic sentences by LU name
  sents()                        every annotated sentence, lazily
  ft_sents(pattern)              full-text sentences by document name
  doc(id)                        one full-text document, by numeric ID
  docs(pattern)                  full-text documents by name, ID ascending
Other:
  help_summary()                 this text
"""


def open_lexicon(root=None):
    """Open a corpus directory as a FrameLexicon."""
    return FrameLexicon.open(root)
