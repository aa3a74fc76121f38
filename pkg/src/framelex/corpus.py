"""Annotated sentences: lexicographic exemplars and full-text documents.

Mixed into FrameLexicon.  Stateless over the store; list-returning methods
have fixed orders (documented per method) so repeated calls are identical.
"""

import re

from .errors import PatternError


def compile_pattern(pattern):
    """Compile a user-supplied lookup pattern; unanchored search semantics."""
    try:
        return re.compile(pattern)
    except re.error as exc:
        raise PatternError(f"bad pattern {pattern!r}: {exc}") from None


class CorpusMixin:
    def _lu_rows(self, pattern=None):
        rows = self._store.lu_index()
        if pattern is not None:
            rx = compile_pattern(pattern)
            rows = [row for row in rows if rx.search(row.name)]
        return sorted(rows, key=lambda row: row.ID)

    def _doc_rows(self, name_pattern=None):
        rows = self._store.doc_index()
        if name_pattern is not None:
            rx = compile_pattern(name_pattern)
            rows = [row for row in rows if rx.search(row.name)]
        return sorted(rows, key=lambda row: row.ID)

    def _iter_exemplars(self, pattern=None):
        for row in self._lu_rows(pattern):
            lu = self._store.get_lu(row.ID)
            yield from sorted(lu["exemplars"], key=lambda s: s["ID"])

    def exemplars(self, pattern=None):
        """Lexicographic sentences whose LU name matches, by (LU ID, sentence ID)."""
        return list(self._iter_exemplars(pattern))

    def ft_sents(self, name_pattern=None):
        """Full-text sentences of matching documents, in document order."""
        sentences = []
        for row in self._doc_rows(name_pattern):
            sentences.extend(self._store.get_document(row.ID)["sentences"])
        return sentences

    def sents(self):
        """Every annotated sentence, exemplars first, lazily.

        A generator: consuming only the leading exemplar sentences never opens
        a full-text file.
        """
        yield from self._iter_exemplars()
        for row in self._doc_rows():
            yield from self._store.get_document(row.ID)["sentences"]

    def doc(self, doc_id):
        """One full-text document, by numeric ID."""
        return self._store.get_document(doc_id)

    def docs(self, name_pattern=None):
        """Full-text documents whose name matches, ID ascending."""
        return [self._store.get_document(row.ID) for row in self._doc_rows(name_pattern)]

    def annotations(self, luNamePattern=None, exemplars=True, full_text=True):
        """Frame annotation sets whose LU name matches the pattern.

        Exemplar-sourced sets come first, then full-text sets; within each
        source, ordered by (sentence ID, set ID).  Full-text sets include
        UNANN ones (target annotated, FEs not).  With both sources disabled
        the result is empty.
        """
        rx = compile_pattern(luNamePattern) if luNamePattern is not None else None
        result = []
        if exemplars:
            part = []
            for sent in self._iter_exemplars(luNamePattern):
                for aset in sent["annotationSet"][1:]:
                    part.append(aset)
            part.sort(key=lambda a: (a["sent"]["ID"], a["ID"]))
            result.extend(part)
        if full_text:
            part = []
            for row in self._doc_rows():
                for sent in self._store.get_document(row.ID)["sentences"]:
                    for aset in sent["annotationSet"][1:]:
                        name = aset.get("luName")
                        if rx is not None and (name is None or not rx.search(name)):
                            continue
                        part.append(aset)
            part.sort(key=lambda a: (a["sent"]["ID"], a["ID"]))
            result.extend(part)
        return result
