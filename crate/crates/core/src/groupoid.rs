//! Finite discrete groupoids given by an explicit composition table.
//!
//! Every finite groupoid is treated as carrying the discrete topology, so
//! every subset is compact open and every unit singleton is open. Elements
//! are addressed by [`ElementId`], whose order is the declaration order of
//! the input file; all "least element" choices use that order.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest groupoid accepted (the associativity check is cubic).
pub const MAX_ELEMENTS: usize = 512;

/// Stop collecting violations after this many; the report is marked truncated.
const MAX_VIOLATIONS: usize = 1000;

/// Position of an element in declaration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementId(usize);

impl ElementId {
    pub fn index(self) -> usize {
        self.0
    }
}

/// The on-disk description of a groupoid.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawGroupoid {
    pub elements: Vec<String>,
    pub source: IndexMap<String, String>,
    pub range: IndexMap<String, String>,
    pub inverse: IndexMap<String, String>,
    pub compose: Vec<[String; 3]>,
}

impl RawGroupoid {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("raw groupoid serializes");
        s.push('\n');
        s
    }

    pub fn validate(&self) -> Result<FiniteGroupoid> {
        validate(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    DuplicateElement(String),
    UnknownElement { context: String, name: String },
    MissingMapEntry { map: &'static str, element: String },
    ConflictingComposition { left: String, right: String },
    NonComposablePair { left: String, right: String },
    MissingComposition { left: String, right: String },
    SourceOfProduct { left: String, right: String },
    RangeOfProduct { left: String, right: String },
    UnitMismatch { element: String, detail: String },
    UnitLaw { element: String, detail: String },
    InverseLaw { element: String, detail: String },
    Associativity { a: String, b: String, c: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            DuplicateElement(e) => write!(f, "duplicate element identifier {e:?}"),
            UnknownElement { context, name } => write!(f, "unknown element {name:?} in {context}"),
            MissingMapEntry { map, element } => write!(f, "{map} map has no entry for {element:?}"),
            ConflictingComposition { left, right } => {
                write!(f, "composition ({left}, {right}) declared twice with different results")
            }
            NonComposablePair { left, right } => {
                write!(
                    f,
                    "non-composable pair: compose({left}, {right}) declared but s({left}) != r({right})"
                )
            }
            MissingComposition { left, right } => {
                write!(
                    f,
                    "missing composition: s({left}) = r({right}) but compose({left}, {right}) undefined"
                )
            }
            SourceOfProduct { left, right } => write!(f, "s({left}{right}) != s({right})"),
            RangeOfProduct { left, right } => write!(f, "r({left}{right}) != r({left})"),
            UnitMismatch { element, detail } => write!(f, "unit mismatch at {element}: {detail}"),
            UnitLaw { element, detail } => write!(f, "unit law fails at {element}: {detail}"),
            InverseLaw { element, detail } => write!(f, "inverse law fails at {element}: {detail}"),
            Associativity { a, b, c } => write!(f, "associativity fails on ({a}, {b}, {c})"),
        }
    }
}

/// Outcome of checking the groupoid axioms.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub truncated: bool,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, v: Violation) -> bool {
        if self.violations.len() >= MAX_VIOLATIONS {
            self.truncated = true;
            return false;
        }
        self.violations.push(v);
        true
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.violations {
            writeln!(f, "  - {v}")?;
        }
        if self.truncated {
            writeln!(f, "  ... (truncated)")?;
        }
        Ok(())
    }
}

/// A validated finite groupoid. Immutable after construction.
#[derive(Clone, Debug)]
pub struct FiniteGroupoid {
    names: Vec<String>,
    index: HashMap<String, ElementId>,
    source: Vec<ElementId>,
    range: Vec<ElementId>,
    inverse: Vec<ElementId>,
    table: Vec<Option<ElementId>>,
    units: Vec<ElementId>,
}

/// The isotropy group `xGx` at a unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotropyGroup {
    pub base_unit: ElementId,
    pub members: Vec<ElementId>,
}

impl IsotropyGroup {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }
}

/// An equivalence class of units under "connected by an arrow".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitClass {
    pub representative: ElementId,
    pub members: Vec<ElementId>,
}

impl OrbitClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Checks every groupoid axiom and returns the validated groupoid, or
/// [`Error::InvalidGroupoid`] carrying the full report.
pub fn validate(raw: &RawGroupoid) -> Result<FiniteGroupoid> {
    let (groupoid, report) = check(raw)?;
    match groupoid {
        Some(g) if report.is_valid() => Ok(g),
        _ => Err(Error::InvalidGroupoid(report)),
    }
}

/// Like [`validate`], but always returns the report. Only emptiness and the
/// size cap are reported as errors.
pub fn check(raw: &RawGroupoid) -> Result<(Option<FiniteGroupoid>, ValidationReport)> {
    let n = raw.elements.len();
    if n == 0 {
        return Err(Error::EmptyGroupoid);
    }
    if n > MAX_ELEMENTS {
        return Err(Error::GroupoidTooLarge {
            size: n,
            cap: MAX_ELEMENTS,
        });
    }
    let mut report = ValidationReport::default();

    let mut index = HashMap::with_capacity(n);
    for (i, name) in raw.elements.iter().enumerate() {
        if index.insert(name.clone(), ElementId(i)).is_some() {
            report.push(Violation::DuplicateElement(name.clone()));
        }
    }

    let mut lookup_map = |map: &IndexMap<String, String>, label: &'static str| {
        let mut out = vec![None; n];
        for (k, v) in map {
            let key = index.get(k).copied();
            let val = index.get(v).copied();
            if key.is_none() {
                report.push(Violation::UnknownElement {
                    context: format!("{label} map key"),
                    name: k.clone(),
                });
            }
            if val.is_none() {
                report.push(Violation::UnknownElement {
                    context: format!("{label} map value"),
                    name: v.clone(),
                });
            }
            if let (Some(k), Some(v)) = (key, val) {
                out[k.0] = Some(v);
            }
        }
        for (i, slot) in out.iter().enumerate() {
            if slot.is_none() && map.get(&raw.elements[i]).is_none() {
                report.push(Violation::MissingMapEntry {
                    map: label,
                    element: raw.elements[i].clone(),
                });
            }
        }
        out
    };
    let source = lookup_map(&raw.source, "source");
    let range = lookup_map(&raw.range, "range");
    let inverse = lookup_map(&raw.inverse, "inverse");

    let mut table: Vec<Option<ElementId>> = vec![None; n * n];
    for [a, b, ab] in &raw.compose {
        let ids: Vec<Option<ElementId>> = [a, b, ab].iter().map(|x| index.get(*x).copied()).collect();
        for (name, id) in [a, b, ab].iter().zip(&ids) {
            if id.is_none() {
                report.push(Violation::UnknownElement {
                    context: "compose".into(),
                    name: (*name).clone(),
                });
            }
        }
        if let [Some(x), Some(y), Some(z)] = ids[..] {
            let slot = &mut table[x.0 * n + y.0];
            match slot {
                Some(prev) if *prev != z => {
                    report.push(Violation::ConflictingComposition {
                        left: a.clone(),
                        right: b.clone(),
                    });
                }
                _ => *slot = Some(z),
            }
        }
    }

    if !report.is_valid() {
        return Ok((None, report));
    }

    let unwrap = |v: Vec<Option<ElementId>>| v.into_iter().map(|x| x.expect("checked")).collect::<Vec<_>>();
    let mut g = FiniteGroupoid {
        names: raw.elements.clone(),
        index,
        source: unwrap(source),
        range: unwrap(range),
        inverse: unwrap(inverse),
        table,
        units: Vec::new(),
    };
    g.units = g.elements().filter(|&x| g.compose(x, x) == Some(x)).collect();
    check_axioms(&g, &mut report);
    Ok((Some(g), report))
}

fn check_axioms(g: &FiniteGroupoid, report: &mut ValidationReport) {
    let name = |x: ElementId| g.names[x.0].clone();
    let unit_set: HashSet<ElementId> = g.units.iter().copied().collect();

    // Composability matches s(a) = r(b) exactly.
    for a in g.elements() {
        for b in g.elements() {
            let composable = g.source(a) == g.range(b);
            match (g.compose(a, b), composable) {
                (Some(_), false) => {
                    if !report.push(Violation::NonComposablePair {
                        left: name(a),
                        right: name(b),
                    }) {
                        return;
                    }
                }
                (None, true) => {
                    if !report.push(Violation::MissingComposition {
                        left: name(a),
                        right: name(b),
                    }) {
                        return;
                    }
                }
                (Some(ab), true) => {
                    if g.source(ab) != g.source(b) {
                        report.push(Violation::SourceOfProduct {
                            left: name(a),
                            right: name(b),
                        });
                    }
                    if g.range(ab) != g.range(a) {
                        report.push(Violation::RangeOfProduct {
                            left: name(a),
                            right: name(b),
                        });
                    }
                }
                (None, false) => {}
            }
        }
    }

    for x in g.elements() {
        let fixed_by_source = g.source(x) == x;
        let fixed_by_range = g.range(x) == x;
        let idempotent = unit_set.contains(&x);
        if fixed_by_source != idempotent || fixed_by_range != idempotent {
            report.push(Violation::UnitMismatch {
                element: name(x),
                detail: format!(
                    "idempotent = {idempotent}, s(x) = x is {fixed_by_source}, r(x) = x is {fixed_by_range}"
                ),
            });
        }
        if idempotent && g.inverse(x) != x {
            report.push(Violation::UnitMismatch {
                element: name(x),
                detail: "unit is not its own inverse".into(),
            });
        }
        for (label, u) in [("source", g.source(x)), ("range", g.range(x))] {
            if !unit_set.contains(&u) {
                report.push(Violation::UnitMismatch {
                    element: name(x),
                    detail: format!("{label} {} is not an idempotent", name(u)),
                });
            }
        }
        if g.compose(g.range(x), x) != Some(x) {
            report.push(Violation::UnitLaw {
                element: name(x),
                detail: "r(x)·x != x".into(),
            });
        }
        if g.compose(x, g.source(x)) != Some(x) {
            report.push(Violation::UnitLaw {
                element: name(x),
                detail: "x·s(x) != x".into(),
            });
        }
        let inv = g.inverse(x);
        if g.inverse(inv) != x {
            report.push(Violation::InverseLaw {
                element: name(x),
                detail: "(x⁻¹)⁻¹ != x".into(),
            });
        }
        if g.compose(x, inv) != Some(g.range(x)) {
            report.push(Violation::InverseLaw {
                element: name(x),
                detail: "x·x⁻¹ != r(x)".into(),
            });
        }
        if g.compose(inv, x) != Some(g.source(x)) {
            report.push(Violation::InverseLaw {
                element: name(x),
                detail: "x⁻¹·x != s(x)".into(),
            });
        }
    }

    if !report.is_valid() {
        // Associativity is only meaningful once the table is coherent.
        return;
    }
    let by_range = g.arrows_by_range();
    for a in g.elements() {
        for &b in &by_range[g.source(a).0] {
            let ab = g.compose(a, b).expect("composable");
            for &c in &by_range[g.source(b).0] {
                let bc = g.compose(b, c).expect("composable");
                if g.compose(ab, c) != g.compose(a, bc)
                    && !report.push(Violation::Associativity {
                        a: name(a),
                        b: name(b),
                        c: name(c),
                    })
                {
                    return;
                }
            }
        }
    }
}

impl FiniteGroupoid {
    pub fn from_json(text: &str) -> Result<Self> {
        RawGroupoid::from_json(text)?.validate()
    }

    pub fn to_json(&self) -> String {
        self.to_raw().to_json()
    }

    /// Canonical description: maps in element order, composition triples
    /// sorted by (left, right).
    pub fn to_raw(&self) -> RawGroupoid {
        let map = |f: &Vec<ElementId>| {
            self.elements()
                .map(|x| (self.name(x).to_string(), self.name(f[x.0]).to_string()))
                .collect()
        };
        let mut compose = Vec::new();
        for a in self.elements() {
            for b in self.elements() {
                if let Some(ab) = self.compose(a, b) {
                    compose.push([
                        self.name(a).to_string(),
                        self.name(b).to_string(),
                        self.name(ab).to_string(),
                    ]);
                }
            }
        }
        RawGroupoid {
            elements: self.names.clone(),
            source: map(&self.source),
            range: map(&self.range),
            inverse: map(&self.inverse),
            compose,
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + '_ {
        (0..self.names.len()).map(ElementId)
    }

    pub fn name(&self, x: ElementId) -> &str {
        &self.names[x.0]
    }

    pub fn id(&self, name: &str) -> Result<ElementId> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    /// Element at a declaration position.
    pub fn element(&self, index: usize) -> ElementId {
        assert!(index < self.len(), "element index out of range");
        ElementId(index)
    }

    pub fn source(&self, x: ElementId) -> ElementId {
        self.source[x.0]
    }

    pub fn range(&self, x: ElementId) -> ElementId {
        self.range[x.0]
    }

    pub fn inverse(&self, x: ElementId) -> ElementId {
        self.inverse[x.0]
    }

    /// The product `ab`, defined exactly when `s(a) = r(b)`.
    pub fn compose(&self, a: ElementId, b: ElementId) -> Option<ElementId> {
        self.table[a.0 * self.names.len() + b.0]
    }

    pub fn is_unit(&self, x: ElementId) -> bool {
        self.source[x.0] == x
    }

    /// Units in declaration order.
    pub fn units(&self) -> &[ElementId] {
        &self.units
    }

    pub fn unit(&self, name: &str) -> Result<ElementId> {
        let x = self.id(name)?;
        if !self.is_unit(x) {
            return Err(Error::NotAUnit(name.to_string()));
        }
        Ok(x)
    }

    fn expect_unit(&self, x: ElementId) -> Result<()> {
        if self.is_unit(x) {
            Ok(())
        } else {
            Err(Error::NotAUnit(self.name(x).to_string()))
        }
    }

    /// For each unit index, the arrows with that range.
    fn arrows_by_range(&self) -> Vec<Vec<ElementId>> {
        let mut out = vec![Vec::new(); self.len()];
        for x in self.elements() {
            out[self.range(x).0].push(x);
        }
        out
    }

    pub fn isotropy(&self, x: ElementId) -> Result<IsotropyGroup> {
        self.expect_unit(x)?;
        Ok(IsotropyGroup {
            base_unit: x,
            members: self.transporter(x, x),
        })
    }

    /// `yGx`: all arrows from `x` to `y`.
    pub fn transporter(&self, y: ElementId, x: ElementId) -> Vec<ElementId> {
        self.elements()
            .filter(|&g| self.range(g) == y && self.source(g) == x)
            .collect()
    }

    /// `s⁻¹(x)`: arrows with source `x`.
    pub fn arrows_from(&self, x: ElementId) -> Vec<ElementId> {
        self.elements().filter(|&g| self.source(g) == x).collect()
    }

    /// Partition of the units into orbits, ordered by representative.
    pub fn orbit_classes(&self) -> Vec<OrbitClass> {
        let mut classes: Vec<BTreeSet<ElementId>> = Vec::new();
        let mut class_of: HashMap<ElementId, usize> = HashMap::new();
        for &u in &self.units {
            if class_of.contains_key(&u) {
                continue;
            }
            let members: BTreeSet<ElementId> = self
                .elements()
                .filter(|&g| self.source(g) == u)
                .map(|g| self.range(g))
                .collect();
            for &m in &members {
                class_of.insert(m, classes.len());
            }
            classes.push(members);
        }
        classes
            .into_iter()
            .map(|members| OrbitClass {
                representative: *members.iter().next().expect("orbit contains its unit"),
                members: members.into_iter().collect(),
            })
            .collect()
    }

    pub fn orbit_of(&self, x: ElementId) -> Result<OrbitClass> {
        self.expect_unit(x)?;
        Ok(self
            .orbit_classes()
            .into_iter()
            .find(|c| c.members.contains(&x))
            .expect("every unit lies in an orbit"))
    }

    /// Every isotropy group is trivial.
    pub fn is_principal(&self) -> bool {
        self.elements()
            .all(|g| self.source(g) != self.range(g) || self.is_unit(g))
    }
}
