use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::words::Word;
use crate::group::{
    affine_gf2s, cyclic_named, direct_product, from_named_permutations, linear_action, matrix_group,
    semidirect_product, ActionTable, GroupTable, Matrix, Permutation, DEFAULT_CAP,
};
use crate::structure::{generated_subgroup, is_clt, is_supersolvable, thm12_hypotheses};

/// One line of a catalog file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogRecord {
    pub id: String,
    #[serde(default)]
    pub name: String,
    pub construction: Construction,
    pub expected_order: usize,
    #[serde(default)]
    pub tags: Vec<String>,
    /// Named subgroups, each given by generating elements (words in the
    /// generator names, or cycle strings for permutation groups).
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub subgroups: BTreeMap<String, Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Construction {
    Cyclic {
        n: usize,
        #[serde(default = "default_generator")]
        generator: String,
    },
    Permutations {
        degree: usize,
        generators: Vec<PermGenerator>,
    },
    DirectProduct {
        left: GroupRef,
        right: GroupRef,
    },
    /// `N x| H` where `action[h][n]` is the word for `h n h^-1`; generators
    /// left out act trivially or are fixed.
    Semidirect {
        normal: GroupRef,
        acting: GroupRef,
        #[serde(default)]
        action: BTreeMap<String, BTreeMap<String, String>>,
    },
    /// `C_p^d x| M` with the matrix group `M` acting on column vectors; the
    /// normal factor's named generators are the standard basis.
    Linear {
        normal: GroupRef,
        acting: GroupRef,
    },
    MatrixGroup {
        p: u32,
        generators: Vec<MatrixGenerator>,
    },
    /// `{x -> a x + u}` over GF(2^s).
    Affine {
        s: u32,
    },
}

fn default_generator() -> String {
    "g".into()
}

/// Either the id of another record or an inline construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupRef {
    Id(String),
    Inline(Box<Construction>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PermGenerator {
    pub name: String,
    /// Images of `1..=degree`, 1-based.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub images: Option<Vec<usize>>,
    /// Cycle notation, e.g. `(1 2)(3 4)` or `(12)(34)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cycles: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixGenerator {
    pub name: String,
    pub rows: Vec<Vec<i64>>,
}

/// A parsed catalog: records in file order with unique ids.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Catalog {
    pub records: Vec<CatalogRecord>,
}

/// A built group and what its construction knows about it.
#[derive(Clone, Debug)]
pub struct BuiltGroup {
    pub table: GroupTable,
    /// Permutation degree, for permutation groups.
    pub degree: Option<usize>,
    matrices: Option<Vec<Matrix>>,
}

impl Catalog {
    /// Parses JSON lines; blank lines are skipped.
    pub fn parse(text: &str) -> Result<Catalog> {
        let mut records: Vec<CatalogRecord> = Vec::new();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let rec: CatalogRecord = serde_json::from_str(line).map_err(|e| Error::Parse {
                line: i + 1,
                column: e.column(),
                message: e.to_string(),
            })?;
            if records.iter().any(|r| r.id == rec.id) {
                return Err(Error::Parse { line: i + 1, column: 1, message: format!("duplicate id `{}`", rec.id) });
            }
            records.push(rec);
        }
        Ok(Catalog { records })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Catalog> {
        let text = std::fs::read_to_string(path.as_ref())
            .map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))?;
        Catalog::parse(&text)
    }

    /// One record per line, in order.
    pub fn to_jsonl(&self) -> String {
        self.records.iter().map(|r| serde_json::to_string(r).expect("serializable") + "\n").collect()
    }

    /// Exact id match first, then a case-insensitive one.
    pub fn get(&self, id: &str) -> Option<&CatalogRecord> {
        self.records
            .iter()
            .find(|r| r.id == id)
            .or_else(|| self.records.iter().find(|r| r.id.eq_ignore_ascii_case(id)))
    }

    pub fn build(&self, id: &str) -> Result<GroupTable> {
        self.build_full(id).map(|b| b.table)
    }

    /// Builds a record and checks its order.
    pub fn build_full(&self, id: &str) -> Result<BuiltGroup> {
        let rec = self.get(id).ok_or_else(|| Error::UnknownName(id.to_string()))?;
        self.build_record(rec, &mut Vec::new())
    }

    fn build_record(&self, rec: &CatalogRecord, stack: &mut Vec<String>) -> Result<BuiltGroup> {
        if stack.contains(&rec.id) {
            return Err(Error::Catalog(format!("cyclic reference through `{}`", rec.id)));
        }
        stack.push(rec.id.clone());
        let built = self.construct(&rec.construction, stack)?;
        stack.pop();
        if built.table.order() != rec.expected_order {
            return Err(Error::OrderMismatch {
                id: rec.id.clone(),
                built: built.table.order(),
                expected: rec.expected_order,
            });
        }
        Ok(built)
    }

    fn resolve(&self, r: &GroupRef, stack: &mut Vec<String>) -> Result<BuiltGroup> {
        match r {
            GroupRef::Id(id) => {
                let rec = self
                    .records
                    .iter()
                    .find(|x| &x.id == id)
                    .ok_or_else(|| Error::Catalog(format!("unknown record id `{id}`")))?;
                self.build_record(rec, stack)
            }
            GroupRef::Inline(c) => self.construct(c, stack),
        }
    }

    fn construct(&self, c: &Construction, stack: &mut Vec<String>) -> Result<BuiltGroup> {
        let plain = |table| BuiltGroup { table, degree: None, matrices: None };
        match c {
            Construction::Cyclic { n, generator } => Ok(plain(cyclic_named(*n, generator)?)),
            Construction::Permutations { degree, generators } => {
                let gens = generators
                    .iter()
                    .map(|g| Ok((g.name.clone(), permutation(*degree, g)?)))
                    .collect::<Result<Vec<_>>>()?;
                check_names(gens.iter().map(|(n, _)| n.as_str()))?;
                let table = from_named_permutations(&gens, DEFAULT_CAP)?;
                Ok(BuiltGroup { table, degree: Some(*degree), matrices: None })
            }
            Construction::DirectProduct { left, right } => {
                let l = self.resolve(left, stack)?;
                let r = self.resolve(right, stack)?;
                let table = direct_product(&l.table, &r.table, DEFAULT_CAP)?;
                check_names(table.generators().iter().map(|(n, _)| n.as_str()))?;
                Ok(plain(table))
            }
            Construction::Semidirect { normal, acting, action } => {
                let n = self.resolve(normal, stack)?.table;
                let h = self.resolve(acting, stack)?.table;
                for name in action.keys() {
                    if h.generator(name).is_none() {
                        return Err(Error::Catalog(format!("`{name}` is not a generator of the acting group")));
                    }
                }
                let mut images = Vec::new();
                for (hname, _) in h.generators() {
                    let map = action.get(hname);
                    let mut row = Vec::new();
                    for (nname, x) in n.generators() {
                        let img = match map.and_then(|m| m.get(nname)) {
                            Some(w) => Word::parse(w)?.eval(&n)?,
                            None => *x,
                        };
                        row.push(img);
                    }
                    if let Some(m) = map {
                        if let Some(bad) = m.keys().find(|k| n.generator(k).is_none()) {
                            return Err(Error::Catalog(format!("`{bad}` is not a generator of the normal factor")));
                        }
                    }
                    images.push(row);
                }
                let act = ActionTable::from_generator_images(&h, &n, &images)?;
                let table = semidirect_product(&n, &h, &act, DEFAULT_CAP)?;
                check_names(table.generators().iter().map(|(n, _)| n.as_str()))?;
                Ok(plain(table))
            }
            Construction::Linear { normal, acting } => {
                let n = self.resolve(normal, stack)?.table;
                let h = self.resolve(acting, stack)?;
                let matrices = h
                    .matrices
                    .as_ref()
                    .ok_or_else(|| Error::Catalog("a linear action needs a matrix group as the acting factor".into()))?;
                let act = linear_action(&h.table, matrices, &n)?;
                let table = semidirect_product(&n, &h.table, &act, DEFAULT_CAP)?;
                check_names(table.generators().iter().map(|(n, _)| n.as_str()))?;
                Ok(plain(table))
            }
            Construction::MatrixGroup { p, generators } => {
                let gens = generators
                    .iter()
                    .map(|g| Ok((g.name.clone(), Matrix::new(*p, &g.rows)?)))
                    .collect::<Result<Vec<_>>>()?;
                check_names(gens.iter().map(|(n, _)| n.as_str()))?;
                let (table, mats) = matrix_group(&gens, DEFAULT_CAP)?;
                Ok(BuiltGroup { table, degree: None, matrices: Some(mats) })
            }
            Construction::Affine { s } => Ok(plain(affine_gf2s(*s)?)),
        }
    }

    /// A named subgroup of a record.
    pub fn subgroup(&self, id: &str, name: &str, g: &BuiltGroup) -> Result<ElementSet> {
        let rec = self.get(id).ok_or_else(|| Error::UnknownName(id.to_string()))?;
        let gens = rec
            .subgroups
            .get(name)
            .ok_or_else(|| Error::UnknownName(format!("{id}/{name}")))?;
        let xs = gens.iter().map(|t| element(g, t)).collect::<Result<Vec<_>>>()?;
        Ok(generated_subgroup(&g.table, &xs))
    }
}

fn permutation(degree: usize, g: &PermGenerator) -> Result<Permutation> {
    match (&g.images, &g.cycles) {
        (Some(images), None) => {
            if images.len() != degree || images.contains(&0) {
                return Err(Error::InvalidPermutation(format!("`{}`: need {degree} images in 1..={degree}", g.name)));
            }
            Permutation::from_images(images.iter().map(|i| i - 1).collect())
        }
        (None, Some(cycles)) => Permutation::from_cycles(degree, cycles),
        _ => Err(Error::InvalidPermutation(format!("`{}`: give exactly one of images or cycles", g.name))),
    }
}

fn check_names<'a>(names: impl Iterator<Item = &'a str>) -> Result<()> {
    let mut seen = std::collections::BTreeSet::new();
    for n in names {
        if !seen.insert(n) {
            return Err(Error::Catalog(format!("duplicate generator name `{n}`")));
        }
    }
    Ok(())
}

/// Resolves an element given as a word in the generator names, a cycle
/// string (permutation groups), or an exact element label.
pub fn element(g: &BuiltGroup, text: &str) -> Result<usize> {
    let t = text.trim();
    if let Some(x) = (0..g.table.order()).find(|&x| g.table.label(x) == t) {
        return Ok(x);
    }
    if let (Some(d), true) = (g.degree, t.starts_with('(')) {
        let want = Permutation::from_cycles(d, t)?.to_string();
        return (0..g.table.order())
            .find(|&x| g.table.label(x) == want)
            .ok_or_else(|| Error::InvalidPermutation(format!("{t} is not in the group")));
    }
    Word::parse(t)?.eval(&g.table)
}

impl BuiltGroup {
    pub fn from_table(table: GroupTable) -> Self {
        BuiltGroup { table, degree: None, matrices: None }
    }
}

/// Outcome of one tag-driven check on a built record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TagCheck {
    pub tag: String,
    pub holds: bool,
}

/// Evaluates the tags that name a checkable property; other tags are
/// descriptive and skipped.
pub fn check_tags(g: &GroupTable, tags: &[String]) -> Result<Vec<TagCheck>> {
    let mut out = Vec::new();
    for tag in tags {
        let holds = match tag.as_str() {
            "thm12-hypotheses" => thm12_hypotheses(g)?,
            "supersolvable" => is_supersolvable(g),
            "not-supersolvable" => !is_supersolvable(g),
            "clt" => is_clt(g),
            "not-clt" => !is_clt(g),
            "abelian" => g.is_abelian(),
            "nonabelian" => !g.is_abelian(),
            _ => continue,
        };
        out.push(TagCheck { tag: tag.clone(), holds });
    }
    Ok(out)
}
