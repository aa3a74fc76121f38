"""On-demand corpus store with permanent in-memory caching.

Opening a store reads exactly one file (the frame index).  Everything else
loads on first touch and stays cached for the life of the store: frame files
when a frame is requested, the LU index on the first LU lookup, per-LU
exemplar files when an LU's sentences are first touched, the relation and
semantic type registries on first relation or type access, and full-text
documents when requested.

Every file actually opened is appended to ``fileAccessLog`` (path relative to
the corpus root, posix separators), which makes load behavior observable and
replayable.  A single re-entrant lock serializes loads, so concurrent first
accesses to the same entity parse its file exactly once and repeated lookups
return the identical cached record.
"""

import os
import threading
from pathlib import Path

from . import xmlio
from .errors import CorpusError, IntegrityError, LookupFailure
from .records import Lazy, Record

ENV_DATA_DIR = "FRAMELEX_DATA"


def open_store(root=None):
    """Open a corpus directory (default: the FRAMELEX_DATA environment var)."""
    if root is None:
        root = os.environ.get(ENV_DATA_DIR)
    if not root:
        raise CorpusError(
            "no data directory: pass a path or set the "
            f"{ENV_DATA_DIR} environment variable"
        )
    return Store(root)


class Store:
    def __init__(self, root):
        self.root = Path(root)
        self.fileAccessLog = []
        self._lock = threading.RLock()
        self._frame_index = None      # list of (ID, name)
        self._frame_name_by_id = {}
        self._frame_id_by_name = {}
        self._frames = {}             # frame ID -> frame record
        self._lu_index = None         # list of index rows
        self._lu_row_by_id = {}
        self._problem_lus = {}        # luID -> placeholder record
        self._doc_index = None
        self._doc_row_by_id = {}
        self._docs = {}               # document ID -> document record
        self._relation_types = None
        self._relations_flat = None
        self._semtypes = None
        self._semtype_by_id = {}
        self._semtype_by_name = {}
        self._semtype_by_abbrev = {}
        if not self.root.is_dir():
            raise CorpusError(f"not a corpus directory: {self.root}")
        self._load_frame_index()

    # ------------------------------------------------------------ file IO

    def _read(self, relpath):
        path = self.root / relpath
        try:
            data = path.read_bytes()
        except FileNotFoundError:
            raise CorpusError(f"missing corpus file: {path}") from None
        self.fileAccessLog.append(relpath)
        return data

    # ------------------------------------------------------------ frames

    def _load_frame_index(self):
        with self._lock:
            entries = xmlio.parse_frame_index(self._read("frameIndex.xml"))
            self._frame_index = entries
            self._frame_name_by_id = {fid: name for fid, name in entries}
            self._frame_id_by_name = {name: fid for fid, name in entries}

    def frame_index(self):
        """All (frame ID, frame name) pairs, from the index alone."""
        return list(self._frame_index)

    def frame_defined(self, name_or_id):
        if isinstance(name_or_id, int):
            return name_or_id in self._frame_name_by_id
        return name_or_id in self._frame_id_by_name

    def get_frame(self, name_or_id):
        """The frame record for a name or ID, loading its file on first use."""
        if isinstance(name_or_id, int):
            fid = name_or_id
            if fid not in self._frame_name_by_id:
                raise LookupFailure(f"no frame with ID {fid}")
        else:
            try:
                fid = self._frame_id_by_name[name_or_id]
            except KeyError:
                raise LookupFailure(f"no frame named {name_or_id!r}") from None
        with self._lock:
            if fid not in self._frames:
                name = self._frame_name_by_id[fid]
                frame = xmlio.parse_frame_file(
                    self._read(f"frame/{name}.xml"),
                    source=f"frame/{name}.xml",
                    relation_query=self.frame_relations_involving,
                    semtype_lookup=self._resolve_semtype_ref,
                    exemplar_loader=self._load_exemplars,
                )
                if frame["ID"] != fid or frame["name"] != name:
                    raise IntegrityError(
                        f"frame/{name}.xml: header ({frame['ID']}, {frame['name']!r}) "
                        f"disagrees with the index ({fid}, {name!r})"
                    )
                self._frames[fid] = frame
            return self._frames[fid]

    def _resolve_semtype_ref(self, st_id, st_name):
        try:
            return self.get_semtype(st_id)
        except LookupFailure:
            raise IntegrityError(
                f"reference to unknown semantic type {st_name!r} ({st_id})"
            ) from None

    # ------------------------------------------------------------ lexical units

    def _ensure_lu_index(self):
        with self._lock:
            if self._lu_index is None:
                rows = xmlio.parse_lu_index(self._read("luIndex.xml"))
                self._lu_index = rows
                self._lu_row_by_id = {row.ID: row for row in rows}

    def lu_index(self):
        """All LU index rows (ID, name, frameID, frameName, status)."""
        self._ensure_lu_index()
        return list(self._lu_index)

    def lu_defined(self, lu_id):
        self._ensure_lu_index()
        return lu_id in self._lu_row_by_id

    def get_lu(self, lu_id):
        """The LU record for an ID: the owning frame's stub, index-routed."""
        self._ensure_lu_index()
        try:
            row = self._lu_row_by_id[lu_id]
        except KeyError:
            raise LookupFailure(f"no lexical unit with ID {lu_id}") from None
        frame = self.get_frame(row.frameID)
        lu = frame["lexUnit"].get(row.name)
        if lu is None or lu["ID"] != lu_id:
            raise IntegrityError(
                f"luIndex.xml: entry {lu_id} ({row.name!r}) not found in frame "
                f"{row.frameName!r}"
            )
        return lu

    def _load_exemplars(self, lu_stub):
        lu_id = lu_stub["ID"]
        relpath = f"lu/lu{lu_id}.xml"
        with self._lock:
            got_id, subcorpora = xmlio.parse_lu_file(self._read(relpath), source=relpath)
        if got_id != lu_id:
            raise IntegrityError(f"{relpath}: file header carries ID {got_id}")
        frame = lu_stub["frame"]
        for sub in subcorpora:
            for sent in sub.sentence:
                dict.__setitem__(sent, "LU", lu_stub)
                dict.__setitem__(sent, "frame", frame)
                for aset in sent["annotationSet"]:
                    dict.__setitem__(aset, "LU", lu_stub)
                    dict.__setitem__(aset, "frame", frame)
        return subcorpora

    def resolve_annotation_lu(self, lu_id, lu_name, frame_id, frame_name):
        """The LU behind a full-text annotation set.

        An ID the index does not know yields a cached placeholder record with
        status "Problem": the set annotates a word the named frame defines no
        LU for.
        """
        if lu_id is not None and self.lu_defined(lu_id):
            return self.get_lu(lu_id)
        with self._lock:
            key = (lu_id, lu_name)
            if key not in self._problem_lus:
                lu = Record()
                lu["status"] = "Problem"
                lu["POS"] = (lu_name or "").rpartition(".")[2].upper()
                lu["name"] = lu_name or ""
                lu["ID"] = lu_id
                lu["_type"] = "lu"
                lu["definition"] = ""
                lu["definitionMarkup"] = ""
                lu["lexemes"] = []
                lu["sentenceCount"] = Record(annotated=0, total=0)
                lu["frame"] = Lazy(lambda: self._frame_for_annotation(frame_id, frame_name))
                lu["URL"] = xmlio.lu_url(lu_id)
                lu["subCorpus"] = []
                lu["exemplars"] = []
                self._problem_lus[key] = lu
            return self._problem_lus[key]

    def _frame_for_annotation(self, frame_id, frame_name):
        if frame_id is not None:
            return self.get_frame(frame_id)
        return self.get_frame(frame_name)

    # ------------------------------------------------------------ documents

    def _ensure_doc_index(self):
        with self._lock:
            if self._doc_index is None:
                rows = xmlio.parse_fulltext_index(self._read("fulltextIndex.xml"))
                self._doc_index = rows
                self._doc_row_by_id = {row.ID: row for row in rows}

    def doc_index(self):
        """All document index rows (ID, name, description, corpus)."""
        self._ensure_doc_index()
        return list(self._doc_index)

    def get_document(self, doc_id):
        """The document record for an ID, loading its file on first use."""
        self._ensure_doc_index()
        try:
            row = self._doc_row_by_id[doc_id]
        except KeyError:
            raise LookupFailure(f"no full-text document with ID {doc_id}") from None
        with self._lock:
            if doc_id not in self._docs:
                candidates = [
                    f"fulltext/{row.name}.xml",
                    f"fulltext/{row.corpusName}__{row.name}.xml",
                ]
                relpath = next(
                    (c for c in candidates if (self.root / c).is_file()), candidates[0]
                )
                doc = xmlio.parse_fulltext_file(
                    self._read(relpath),
                    source=relpath,
                    lu_resolver=self.resolve_annotation_lu,
                    frame_resolver=self._frame_for_annotation,
                )
                if doc["ID"] != doc_id:
                    raise IntegrityError(f"{relpath}: file header carries ID {doc['ID']}")
                self._docs[doc_id] = doc
            return self._docs[doc_id]

    # ------------------------------------------------------------ relations

    def _ensure_relations(self):
        with self._lock:
            if self._relation_types is None:
                types = xmlio.parse_relations_file(
                    self._read("frRelation.xml"),
                    frame_resolver=lambda fid, name: self.get_frame(fid),
                )
                self._relation_types = types
                self._relations_flat = [
                    rel for rtype in types for rel in rtype["frameRelations"]
                ]

    def relation_types(self):
        """All frame relation types, registry file order."""
        self._ensure_relations()
        return list(self._relation_types)

    def frame_relations_all(self):
        """Every frame-to-frame relation, registry file order."""
        self._ensure_relations()
        return list(self._relations_flat)

    def frame_relations_involving(self, frame_id):
        """Relations with the given frame on either side, registry order."""
        self._ensure_relations()
        return [
            rel
            for rel in self._relations_flat
            if rel["supID"] == frame_id or rel["subID"] == frame_id
        ]

    def fe_relations_all(self):
        """Every FE-to-FE mapping across all relations, registry order."""
        self._ensure_relations()
        return [fe for rel in self._relations_flat for fe in rel["feRelations"]]

    # ------------------------------------------------------------ semtypes

    def _ensure_semtypes(self):
        with self._lock:
            if self._semtypes is None:
                types = xmlio.parse_semtypes_file(self._read("semTypes.xml"))
                self._semtypes = types
                self._semtype_by_id = {st["ID"]: st for st in types}
                self._semtype_by_name = {st["name"]: st for st in types}
                self._semtype_by_abbrev = {st["abbrev"]: st for st in types}

    def semtypes(self):
        """All semantic types, ID ascending."""
        self._ensure_semtypes()
        return sorted(self._semtypes, key=lambda st: st["ID"])

    def get_semtype(self, key):
        """A semantic type by ID, name, or abbreviation."""
        self._ensure_semtypes()
        if isinstance(key, int):
            st = self._semtype_by_id.get(key)
        else:
            st = self._semtype_by_name.get(key) or self._semtype_by_abbrev.get(key)
        if st is None:
            raise LookupFailure(f"no semantic type matching {key!r}")
        return st
