"""Frame-to-frame relations and the semantic type hierarchy.

Mixed into FrameLexicon.  Stateless over the store except for
``propagate_semtypes``, which writes FE semantic type labels and therefore
takes the store's lock for its whole run.
"""

from .errors import LookupFailure
from .records import Record


def _is_record(obj, kind):
    return isinstance(obj, Record) and obj.get("_type") == kind


class RelationsMixin:
    def frame_relation_types(self):
        """All frame relation types, registry file order."""
        return self._store.relation_types()

    def frame_relations(self, frame=None, frame2=None, type=None):
        """Frame-to-frame relations, optionally filtered.

        ``frame`` keeps relations with that frame on either side; ``frame2``
        additionally requires the other side to match it (either orientation);
        ``type`` keeps one relation type, given by name or record.
        """
        if frame2 is not None and frame is None:
            raise ValueError("frame_relations: frame2 requires frame")
        if frame is None:
            relations = self._store.frame_relations_all()
        else:
            relations = self._store.frame_relations_involving(self._frame_id(frame))
        if frame2 is not None:
            fid, fid2 = self._frame_id(frame), self._frame_id(frame2)
            relations = [
                rel
                for rel in relations
                if {rel["supID"], rel["subID"]} == {fid, fid2}
            ]
        if type is not None:
            rtype = self._relation_type(type)
            relations = [rel for rel in relations if rel["type"] is rtype]
        return relations

    def fe_relations(self):
        """Every FE-to-FE mapping across all frame relations, registry order."""
        return self._store.fe_relations_all()

    def _frame_id(self, key):
        if _is_record(key, "frame"):
            return key["ID"]
        if isinstance(key, int):
            if not self._store.frame_defined(key):
                raise LookupFailure(f"no frame with ID {key}")
            return key
        return self.frame(key)["ID"]

    def _relation_type(self, key):
        if _is_record(key, "framerelationtype"):
            return key
        for rtype in self._store.relation_types():
            if rtype["name"] == key or rtype["ID"] == key:
                return rtype
        raise LookupFailure(f"no frame relation type matching {key!r}")

    # ------------------------------------------------------------ semtypes

    def semtypes(self):
        """All semantic types, ID ascending."""
        return self._store.semtypes()

    def semtype(self, key):
        """One semantic type, by name, abbreviation, or numeric ID."""
        if _is_record(key, "semtype"):
            return key
        return self._store.get_semtype(key)

    def semtype_inherits(self, st, ancestor):
        """Whether ``st`` is ``ancestor`` or lies below it in the hierarchy."""
        node = self.semtype(st)
        target = self.semtype(ancestor)
        while node is not None:
            if node is target:
                return True
            node = node["superType"]
        return False

    def propagate_semtypes(self):
        """Copy FE semantic types downward across every FE-to-FE mapping.

        Runs to a fixed point: an unlabeled sub-FE takes its super-FE's type,
        including types that arrived in an earlier pass.  Existing labels are
        never replaced, whether compatible or conflicting.  Returns the number
        of FEs newly labeled; a second call on an unchanged store returns 0.

        Requires exclusive use of the store for the duration of the call.
        """
        added = 0
        with self._store._lock:
            mappings = self._store.fe_relations_all()
            changed = True
            while changed:
                changed = False
                for mapping in mappings:
                    st = mapping["superFE"]["semType"]
                    if st is None:
                        continue
                    sub_fe = mapping["subFE"]
                    if sub_fe["semType"] is None:
                        sub_fe["semType"] = st
                        added += 1
                        changed = True
        return added
