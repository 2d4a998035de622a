"""Building-block catalog: record model, bundled tables, parser and validators.

Catalog files are UTF-8, line-oriented `key = value` records separated by
blank lines; Gram matrices are bracketed integer lists.  One file per source
table; see docs/catalog-format.md.  The env var TCS_TABLES_DIR overrides the
bundled table location.
"""

import ast
import os
from importlib import resources

from . import exactalg as xa
from . import lattice as lat

KINDS = {
    "fano_rank1",
    "fano_rank2",
    "semifano_small_res",
    "semifano_crepant",
    "nongeneric_pencil",
    "nonsymplectic",
}


class CatalogError(ValueError):
    pass


class BlockRecord:
    def __init__(self, id, kind, n_gram=None, anticanonical_class=None, b3_Z=None,
                 rk_K=0, div_c2=frozenset(), div_c2_mod_Aperp=None, e_rigid=0,
                 ell_N=None, gramless=False, meta=None, notes=""):
        self.id = id
        self.kind = kind
        self.n_gram = n_gram
        self.anticanonical_class = anticanonical_class
        self.b3_Z = b3_Z
        self.rk_K = rk_K
        self.div_c2 = frozenset(int(x) for x in div_c2)
        self.div_c2_mod_Aperp = div_c2_mod_Aperp
        self.e_rigid = e_rigid
        self.ell_N = ell_N
        self.gramless = gramless
        self.meta = dict(meta or {})
        self.notes = notes

    @property
    def rank(self):
        if self.gramless:
            return self.meta["rank"]
        return len(self.n_gram)

    def lattice(self):
        if self.gramless:
            raise CatalogError(f"{self.id}: gramless record has no lattice")
        return lat.Lattice(self.n_gram)

    def ell(self):
        if self.gramless:
            return self.ell_N
        return lat.ell(self.lattice())

    def __repr__(self):
        return f"BlockRecord({self.id!r})"


class Catalog:
    def __init__(self, records, provenance=""):
        self.records = {}
        for rec in records:
            if rec.id in self.records:
                raise CatalogError(f"duplicate id {rec.id}")
            self.records[rec.id] = rec
        self.provenance = provenance

    def __getitem__(self, id):
        return self.records[id]

    def __iter__(self):
        return iter(self.records.values())

    def __len__(self):
        return len(self.records)

    def ids(self):
        return list(self.records)

    def merged_with(self, other):
        return Catalog(list(self) + list(other), provenance=f"{self.provenance}+{other.provenance}")


def _parse_value(raw, path, lineno):
    raw = raw.strip()
    if raw.startswith("[") or raw.startswith("{") or raw.startswith("("):
        try:
            return ast.literal_eval(raw)
        except (ValueError, SyntaxError) as exc:
            raise CatalogError(f"{path}:{lineno}: bad literal {raw!r}: {exc}") from None
    if raw in ("true", "false"):
        return raw == "true"
    try:
        return int(raw)
    except ValueError:
        return raw


def _validate_record(fields, path, lineno):
    rid = fields.get("id")
    if not rid:
        raise CatalogError(f"{path}:{lineno}: record without id")
    kind = fields.get("kind")
    if kind not in KINDS:
        raise CatalogError(f"{path}:{lineno}: {rid}: unknown kind {kind!r}")
    gramless = bool(fields.get("gramless", False))
    meta_keys = ("r", "d", "b3_Y", "name", "rank", "resolutions", "genus")
    meta = {k: fields[k] for k in meta_keys if k in fields}
    rec = BlockRecord(
        id=rid,
        kind=kind,
        n_gram=fields.get("gram"),
        anticanonical_class=fields.get("A"),
        b3_Z=fields.get("b3_Z"),
        rk_K=fields.get("rk_K", 0),
        div_c2=fields.get("div_c2", set()),
        div_c2_mod_Aperp=fields.get("div_c2_mod_Aperp"),
        e_rigid=fields.get("e", 0),
        ell_N=fields.get("ell"),
        gramless=gramless,
        meta=meta,
        notes=fields.get("notes", ""),
    )
    if gramless:
        if rec.ell_N is None or "rank" not in rec.meta:
            raise CatalogError(f"{path}:{lineno}: {rid}: gramless record needs rank and ell")
        disc = fields.get("disc")
        if disc is not None:
            rec.meta["disc"] = list(disc)
        return rec
    if rec.n_gram is None:
        raise CatalogError(f"{path}:{lineno}: {rid}: missing gram")
    L = lat.Lattice(rec.n_gram)
    if not L.is_even():
        raise CatalogError(f"{path}:{lineno}: {rid}: violates evenness (K3 Picard sublattice)")
    sig = lat.signature(L)
    if sig.as_pair() != (1, L.rank - 1):
        raise CatalogError(f"{path}:{lineno}: {rid}: violates signature (1, rank-1), got {sig.as_pair()}")
    if rec.anticanonical_class is None:
        raise CatalogError(f"{path}:{lineno}: {rid}: missing A")
    if L.norm(rec.anticanonical_class) <= 0:
        raise CatalogError(f"{path}:{lineno}: {rid}: violates A.A > 0")
    mk3 = fields.get("minus_k3")
    if mk3 is not None and L.norm(rec.anticanonical_class) != mk3:
        raise CatalogError(f"{path}:{lineno}: {rid}: violates A.A = -K^3")
    if rec.b3_Z is None or rec.b3_Z % 2 != 0:
        raise CatalogError(f"{path}:{lineno}: {rid}: violates b3_Z even")
    for v in rec.div_c2:
        if v % 2 != 0:
            raise CatalogError(f"{path}:{lineno}: {rid}: violates div_c2 even")
    if rec.kind in ("fano_rank1", "fano_rank2") and rec.e_rigid != 0:
        raise CatalogError(f"{path}:{lineno}: {rid}: Fano blocks have no K-trivial curves (e = 0)")
    return rec


def parse_catalog_text(text, path="<string>"):
    records = []
    fields = {}
    start_line = 1
    schema_seen = False
    table = ""
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped.startswith("#"):
            continue
        if not stripped:
            if fields:
                records.append(_validate_record(fields, path, start_line))
                fields = {}
            continue
        if "=" not in stripped:
            raise CatalogError(f"{path}:{lineno}: expected 'key = value'")
        key, raw = stripped.split("=", 1)
        key = key.strip()
        value = _parse_value(raw, path, lineno)
        if key == "schema":
            if value != 1:
                raise CatalogError(f"{path}:{lineno}: unsupported schema {value}")
            schema_seen = True
            continue
        if not schema_seen:
            raise CatalogError(f"{path}:{lineno}: missing 'schema = 1' header")
        if key == "table":
            table = value
            continue
        if not fields:
            start_line = lineno
        if key in fields:
            raise CatalogError(f"{path}:{lineno}: duplicate key {key}")
        fields[key] = value
    if fields:
        records.append(_validate_record(fields, path, start_line))
    if not schema_seen:
        raise CatalogError(f"{path}: missing 'schema = 1' header")
    return Catalog(records, provenance=table or path)


def load_catalog(path):
    with open(path, encoding="utf-8") as fh:
        return parse_catalog_text(fh.read(), path=str(path))


def _tables_dir():
    override = os.environ.get("TCS_TABLES_DIR")
    if override:
        return override
    return None


def load_bundled(name):
    override = _tables_dir()
    if override:
        return load_catalog(os.path.join(override, name))
    ref = resources.files("tcslat").joinpath("tables").joinpath(name)
    return parse_catalog_text(ref.read_text(encoding="utf-8"), path=f"tables/{name}")


def rank1_catalog():
    return load_bundled("rank1.blocks")


def table2_catalog():
    return load_bundled("table2.blocks")


def rank2_catalog():
    return load_bundled("rank2.blocks")


def table6_catalog():
    return load_bundled("table6.polytopes")


def full_catalog():
    """The gram-carrying tables (rank-1, the worked examples, rank-2 Fanos)."""
    return rank1_catalog().merged_with(table2_catalog()).merged_with(rank2_catalog())


def all_catalogs():
    """Everything bundled, including the gramless polytope records."""
    return full_catalog().merged_with(table6_catalog())


def validate_rank1(rec):
    """N = <rd>, A = r * generator so A.A = r^3 d, b3_Z = b3_Y + 2g with
    2g - 2 = r^3 d.  Returns (ok, reason)."""
    if rec.kind != "fano_rank1":
        return False, "not a rank-1 Fano record"
    r = rec.meta.get("r")
    d = rec.meta.get("d")
    b3_Y = rec.meta.get("b3_Y")
    if r is None or d is None or b3_Y is None:
        return False, "missing r / d / b3_Y metadata"
    if rec.n_gram != [[r * d]]:
        return False, f"polarising lattice is not <{r * d}>"
    if rec.anticanonical_class != [r]:
        return False, "A is not r times the generator"
    deg = r**3 * d
    if deg % 2 != 0:
        return False, "r^3 d must be even"
    g = (deg + 2) // 2
    if rec.b3_Z != b3_Y + 2 * g:
        return False, f"b3_Z = {rec.b3_Z} != b3_Y + 2g = {b3_Y + 2 * g}"
    return True, ""


def block_lattice(rec):
    """Defensive copy of the polarising lattice."""
    return lat.Lattice([row[:] for row in rec.n_gram])


def block_A(rec):
    """Defensive copy of the anticanonical class (coordinates in N's basis)."""
    return list(rec.anticanonical_class)


class BurkhardtStructure:
    """Explicit transcendental placement for the rank-16 quartic-resolution block:
    T = A2(-1) + U(3) + U(3) inside the K3 lattice, N its complement."""

    def __init__(self, t_rows, n_basis, a_in_L):
        self.t_rows = t_rows
        self.n_basis = n_basis
        self.a_in_L = a_in_L

    @property
    def n_lattice(self):
        from . import embed

        sub = lat.Sublattice(embed.k3_lattice(), self.n_basis)
        return sub.lattice()

    def t_lattice(self):
        from . import embed

        return lat.Sublattice(embed.k3_lattice(), self.t_rows).lattice()


_BURKHARDT = None


def burkhardt_structure():
    """Construct (once) the explicit N, T pair used by the rank-16 block."""
    global _BURKHARDT
    if _BURKHARDT is not None:
        return _BURKHARDT
    from . import embed

    L = embed.k3_lattice()
    n = L.rank

    def unit(i):
        v = [0] * n
        v[i] = 1
        return v

    r1 = unit(6)
    r2 = unit(7)
    u1 = unit(0)
    u2 = [0] * n
    u2[0] = -1
    u2[1] = 3
    u2[2] = 3
    u2[3] = 1
    w1 = unit(4)
    w2 = [0] * n
    w2[4] = 1
    w2[5] = 3
    w2[14] = 1
    w2[16] = 1
    w2[18] = 1
    t_rows = xa.mat([r1, r2, u1, u2, w1, w2])
    T = lat.Sublattice(L, t_rows)
    N = lat.orthogonal_complement(T)
    a_in_L = [0] * n
    a_in_L[0] = -2
    a_in_L[2] = 3
    a_in_L[3] = 1
    a_in_L[20] = 1
    _BURKHARDT = BurkhardtStructure(t_rows, N.basis, xa.vec(a_in_L))
    return _BURKHARDT
