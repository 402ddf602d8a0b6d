use std::fmt::Write;
use std::str::FromStr;
use std::sync::Arc;

use super::parse::parse_polynomial;
use crate::arith::{FreeVector, GradedFreeModule, ModuleCtx, PolyRing, Polynomial, PrimeField};
use crate::bounds::{Inequality, Params};
use crate::error::{Error, Result};
use crate::resolution::{ModulePresentation, RingPresentation};

/// Which module a session describes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleSpec {
    ResidueField,
    MaxIdealPower {
        s: i64,
    },
    /// Cokernel of a matrix whose columns are relations; one row per
    /// generator, generator `k` in degree `shifts[k]`.
    Coker {
        matrix: Vec<Vec<String>>,
        shifts: Vec<i64>,
    },
    /// `R^(c,d)` as a module over `R^(c)`.
    VeronesePiece {
        c: i64,
        d: i64,
    },
}

impl ModuleSpec {
    pub fn kind(&self) -> &'static str {
        match self {
            ModuleSpec::ResidueField => "residue-field",
            ModuleSpec::MaxIdealPower { .. } => "max-ideal-power",
            ModuleSpec::Coker { .. } => "coker",
            ModuleSpec::VeronesePiece { .. } => "veronese-piece",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SpecCutoffs {
    pub n: Option<usize>,
    pub d: Option<i64>,
    /// Accepted for compatibility; Veronese generating sets are exact.
    pub g: Option<i64>,
}

/// An inequality to check, for corpus files.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckSpec {
    pub inequality: Inequality,
    pub params: Params,
}

/// A ring, a module over it and cutoffs, as read from a key-value file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SessionSpec {
    pub characteristic: u32,
    pub vars: Vec<String>,
    pub ideal: Vec<String>,
    pub module: ModuleSpec,
    pub twist: i64,
    pub cutoffs: SpecCutoffs,
    pub check: Option<CheckSpec>,
}

impl Default for SessionSpec {
    fn default() -> Self {
        SessionSpec {
            characteristic: crate::arith::DEFAULT_CHARACTERISTIC,
            vars: Vec::new(),
            ideal: Vec::new(),
            module: ModuleSpec::ResidueField,
            twist: 0,
            cutoffs: SpecCutoffs::default(),
            check: None,
        }
    }
}

struct Entry<'a> {
    key: &'a str,
    value: &'a str,
    /// Byte offset of `value` in the source text.
    at: usize,
}

fn split_list(value: &str, at: usize, sep: char) -> Vec<(&str, usize)> {
    let mut out = Vec::new();
    if value.trim().is_empty() {
        return out;
    }
    let mut start = 0;
    for (k, ch) in value
        .char_indices()
        .chain(std::iter::once((value.len(), sep)))
    {
        if ch == sep {
            let raw = &value[start..k];
            let lead = raw.len() - raw.trim_start().len();
            out.push((raw.trim(), at + start + lead));
            start = k + ch.len_utf8();
        }
    }
    out
}

fn has_content(block: &str) -> bool {
    block
        .lines()
        .any(|l| !l.split('#').next().unwrap_or("").trim().is_empty())
}

fn number<T: FromStr>(e: &Entry<'_>) -> Result<T> {
    e.value.trim().parse().map_err(|_| {
        Error::parse(
            e.at,
            format!("'{}' expects an integer, got '{}'", e.key, e.value.trim()),
        )
    })
}

fn numbers(e: &Entry<'_>) -> Result<Vec<i64>> {
    split_list(e.value, e.at, ',')
        .into_iter()
        .map(|(s, at)| {
            s.parse()
                .map_err(|_| Error::parse(at, format!("expected an integer, got '{s}'")))
        })
        .collect()
}

impl SessionSpec {
    /// Parses the key-value format: one `key = value` per line, `#` starts a
    /// comment. Errors carry byte offsets into `text`.
    pub fn parse(text: &str) -> Result<Self> {
        Self::parse_at(text, 0)
    }

    fn parse_at(text: &str, base: usize) -> Result<Self> {
        let mut entries: Vec<Entry<'_>> = Vec::new();
        let mut offset = 0;
        for line in text.split_inclusive('\n') {
            let body = line.split('#').next().unwrap_or("");
            let body = body.trim_end_matches(['\n', '\r']);
            if !body.trim().is_empty() {
                let Some(eq) = body.find('=') else {
                    let lead = body.len() - body.trim_start().len();
                    return Err(Error::parse(base + offset + lead, "expected 'key = value'"));
                };
                let key = body[..eq].trim();
                let value = &body[eq + 1..];
                let lead = value.len() - value.trim_start().len();
                if entries.iter().any(|e| e.key == key) {
                    return Err(Error::parse(
                        base + offset,
                        format!("duplicate key '{key}'"),
                    ));
                }
                entries.push(Entry {
                    key,
                    value: value.trim(),
                    at: base + offset + eq + 1 + lead,
                });
            }
            offset += line.len();
        }
        let mut spec = SessionSpec::default();
        let mut kind: Option<&Entry<'_>> = None;
        let (mut s, mut c, mut d) = (None, None, None);
        let (mut matrix, mut shifts) = (None, None);
        let mut check_ineq: Option<&Entry<'_>> = None;
        let mut check = Params::default();
        for e in &entries {
            match e.key {
                "char" => spec.characteristic = number(e)?,
                "vars" => {
                    spec.vars = split_list(e.value, e.at, ',')
                        .into_iter()
                        .map(|(v, _)| v.to_string())
                        .collect();
                    for (v, at) in split_list(e.value, e.at, ',') {
                        let ok = v
                            .chars()
                            .next()
                            .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                            && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
                        if !ok {
                            return Err(Error::parse(at, format!("invalid variable name '{v}'")));
                        }
                    }
                }
                "ideal" => {
                    spec.ideal = split_list(e.value, e.at, ',')
                        .into_iter()
                        .map(|(v, _)| v.to_string())
                        .collect();
                }
                "module.kind" => kind = Some(e),
                "module.s" => s = Some(number::<i64>(e)?),
                "module.c" => c = Some(number::<i64>(e)?),
                "module.d" => d = Some(number::<i64>(e)?),
                "module.matrix" => matrix = Some(e),
                "module.shifts" => shifts = Some(numbers(e)?),
                "twist" => spec.twist = number(e)?,
                "cutoffs.N" => spec.cutoffs.n = Some(number(e)?),
                "cutoffs.D" => spec.cutoffs.d = Some(number(e)?),
                "cutoffs.G" => spec.cutoffs.g = Some(number(e)?),
                "check.ineq" => check_ineq = Some(e),
                "check.c" => check.c = Some(number(e)?),
                "check.s" => check.s = Some(number(e)?),
                "check.d" => check.d = Some(number(e)?),
                other => {
                    return Err(Error::parse(e.at - 1, format!("unknown key '{other}'")));
                }
            }
        }
        let need = |v: Option<i64>, name: &str, at: usize| {
            v.ok_or_else(|| Error::parse(at, format!("module kind needs '{name}'")))
        };
        let kind_at = kind.map_or(base, |e| e.at);
        spec.module = match kind.map(|e| e.value) {
            None | Some("residue-field") => ModuleSpec::ResidueField,
            Some("max-ideal-power") => ModuleSpec::MaxIdealPower {
                s: need(s, "module.s", kind_at)?,
            },
            Some("veronese-piece") => ModuleSpec::VeronesePiece {
                c: need(c, "module.c", kind_at)?,
                d: need(d, "module.d", kind_at)?,
            },
            Some("coker") => {
                let shifts = shifts
                    .ok_or_else(|| Error::parse(kind_at, "module kind needs 'module.shifts'"))?;
                let rows: Vec<Vec<String>> = match matrix {
                    None => vec![Vec::new(); shifts.len()],
                    Some(m) if m.value.is_empty() => vec![Vec::new(); shifts.len()],
                    Some(m) => split_list(m.value, m.at, ';')
                        .into_iter()
                        .map(|(row, _)| row.split(',').map(|x| x.trim().to_string()).collect())
                        .collect(),
                };
                if rows.len() != shifts.len() {
                    let at = matrix.map_or(kind_at, |m| m.at);
                    return Err(Error::parse(
                        at,
                        "one matrix row per generator shift required",
                    ));
                }
                let width = rows.first().map_or(0, |r| r.len());
                if rows.iter().any(|r| r.len() != width) {
                    return Err(Error::parse(
                        matrix.map_or(kind_at, |m| m.at),
                        "matrix rows differ in length",
                    ));
                }
                ModuleSpec::Coker {
                    matrix: rows,
                    shifts,
                }
            }
            Some(other) => {
                return Err(Error::parse(
                    kind_at,
                    format!("unknown module kind '{other}'"),
                ))
            }
        };
        if let Some(e) = check_ineq {
            let inequality = e
                .value
                .parse()
                .map_err(|_| Error::parse(e.at, format!("unknown inequality '{}'", e.value)))?;
            spec.check = Some(CheckSpec {
                inequality,
                params: check,
            });
        } else if check != Params::default() {
            return Err(Error::parse(base, "check parameters without 'check.ineq'"));
        }
        if spec.vars.is_empty() {
            return Err(Error::parse(base, "missing 'vars'"));
        }
        Ok(spec)
    }

    /// Several sessions separated by lines consisting of `---`.
    pub fn parse_many(text: &str) -> Result<Vec<Self>> {
        let mut out = Vec::new();
        let mut start = 0;
        let mut offset = 0;
        for line in text.split_inclusive('\n') {
            if line.trim() == "---" {
                let block = &text[start..offset];
                if has_content(block) {
                    out.push(Self::parse_at(block, start)?);
                }
                start = offset + line.len();
            }
            offset += line.len();
        }
        let block = &text[start..];
        if has_content(block) {
            out.push(Self::parse_at(block, start)?);
        }
        Ok(out)
    }

    /// The key-value form; parsing it gives back `self`.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        writeln!(out, "char = {}", self.characteristic).unwrap();
        writeln!(out, "vars = {}", self.vars.join(", ")).unwrap();
        if !self.ideal.is_empty() {
            writeln!(out, "ideal = {}", self.ideal.join(", ")).unwrap();
        }
        writeln!(out, "module.kind = {}", self.module.kind()).unwrap();
        match &self.module {
            ModuleSpec::ResidueField => {}
            ModuleSpec::MaxIdealPower { s } => writeln!(out, "module.s = {s}").unwrap(),
            ModuleSpec::VeronesePiece { c, d } => {
                writeln!(out, "module.c = {c}").unwrap();
                writeln!(out, "module.d = {d}").unwrap();
            }
            ModuleSpec::Coker { matrix, shifts } => {
                let sh: Vec<String> = shifts.iter().map(|s| s.to_string()).collect();
                writeln!(out, "module.shifts = {}", sh.join(", ")).unwrap();
                if matrix.iter().any(|r| !r.is_empty()) {
                    let rows: Vec<String> = matrix.iter().map(|r| r.join(", ")).collect();
                    writeln!(out, "module.matrix = {}", rows.join("; ")).unwrap();
                }
            }
        }
        if self.twist != 0 {
            writeln!(out, "twist = {}", self.twist).unwrap();
        }
        for (k, v) in [
            ("N", self.cutoffs.n.map(|n| n as i64)),
            ("D", self.cutoffs.d),
            ("G", self.cutoffs.g),
        ] {
            if let Some(v) = v {
                writeln!(out, "cutoffs.{k} = {v}").unwrap();
            }
        }
        if let Some(check) = &self.check {
            writeln!(out, "check.ineq = {}", check.inequality).unwrap();
            for (k, v) in [
                ("c", check.params.c),
                ("s", check.params.s),
                ("d", check.params.d),
            ] {
                if let Some(v) = v {
                    writeln!(out, "check.{k} = {v}").unwrap();
                }
            }
        }
        out
    }

    pub fn poly_ring(&self) -> Result<Arc<PolyRing>> {
        let field = PrimeField::new(self.characteristic)?;
        let mut seen = std::collections::HashSet::new();
        for v in &self.vars {
            if !seen.insert(v) {
                return Err(Error::usage(format!("variable '{v}' declared twice")));
            }
        }
        Ok(Arc::new(PolyRing::new(field, self.vars.clone())))
    }

    fn poly(ring: &PolyRing, text: &str) -> Result<Polynomial> {
        parse_polynomial(ring, text).map_err(|e| match e {
            Error::Parse { offset, message } => {
                Error::parse(offset, format!("in '{text}': {message}"))
            }
            other => other,
        })
    }

    /// Builds the ring, rejecting inhomogeneous or low-degree generators by
    /// name.
    pub fn ring(&self) -> Result<Arc<RingPresentation>> {
        let ring = self.poly_ring()?;
        let mut gens = Vec::new();
        for text in &self.ideal {
            let g = Self::poly(&ring, text)?;
            match ring.homogeneous_degree(&g) {
                _ if g.is_zero() => {}
                None => {
                    return Err(Error::usage(format!(
                        "ideal generator '{text}' is not homogeneous"
                    )))
                }
                Some(d) if d < 2 => {
                    return Err(Error::usage(format!(
                        "ideal generator '{text}' has degree {d} < 2"
                    )))
                }
                _ => {}
            }
            gens.push(g);
        }
        Ok(Arc::new(RingPresentation::new(ring, gens)?))
    }

    /// The module as an `R`-module; Veronese pieces live over another ring
    /// and are built by the caller.
    pub fn module(
        &self,
        ring: &Arc<RingPresentation>,
        relation_cap: i64,
    ) -> Result<ModulePresentation> {
        let m = match &self.module {
            ModuleSpec::ResidueField => ModulePresentation::residue_field(ring.clone()),
            ModuleSpec::MaxIdealPower { s } => {
                ModulePresentation::power_of_maximal_ideal(ring.clone(), *s, relation_cap + s)?
            }
            ModuleSpec::Coker { matrix, shifts } => {
                let module = GradedFreeModule::new(shifts.clone());
                let r = ring.ring();
                let ctx = ModuleCtx::new(r, &module);
                let width = matrix.first().map_or(0, |row| row.len());
                let mut rels: Vec<FreeVector> = Vec::new();
                for col in 0..width {
                    let mut comps = Vec::new();
                    for (row, entries) in matrix.iter().enumerate() {
                        comps.push((row, Self::poly(r, &entries[col])?));
                    }
                    let refs: Vec<(usize, &Polynomial)> =
                        comps.iter().map(|(k, p)| (*k, p)).collect();
                    let v = ctx.from_polys(&refs);
                    if !v.is_zero() && !ctx.is_homogeneous(&v) {
                        return Err(Error::usage(format!(
                            "matrix column {col} is not homogeneous for shifts {shifts:?}"
                        )));
                    }
                    rels.push(v);
                }
                ModulePresentation::new(ring.clone(), shifts.clone(), rels, 0)?
            }
            ModuleSpec::VeronesePiece { .. } => {
                return Err(Error::usage(
                    "a Veronese piece is not a module over the base ring",
                ))
            }
        };
        Ok(m.twisted(self.twist))
    }
}

impl SessionSpec {
    /// The ring of `r` with the residue field as module.
    pub fn from_ring(r: &RingPresentation) -> Self {
        let ring = r.ring();
        SessionSpec {
            characteristic: ring.field().characteristic(),
            vars: ring.names().to_vec(),
            ideal: r.ideal().iter().map(|g| ring.fmt(g)).collect(),
            ..SessionSpec::default()
        }
    }

    /// `m` as a cokernel over its ring.
    pub fn from_module(m: &ModulePresentation) -> Self {
        let ring = m.ring().ring();
        let matrix = (0..m.rank())
            .map(|row| {
                m.relations()
                    .iter()
                    .map(|v| ring.fmt(&v.component(row)))
                    .collect()
            })
            .collect();
        SessionSpec {
            module: ModuleSpec::Coker {
                matrix,
                shifts: m.shifts().to_vec(),
            },
            twist: m.twist(),
            ..Self::from_ring(m.ring())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const HYPERSURFACE: &str = "# a quadric cone\nchar = 32003\nvars = x, y, z\nideal = x^2 + y*z\nmodule.kind = coker\nmodule.shifts = 0, 1\nmodule.matrix = x, y^2; 0, z\ncutoffs.N = 4\n";

    #[test]
    fn parses_and_round_trips() {
        let spec = SessionSpec::parse(HYPERSURFACE).unwrap();
        assert_eq!(spec.vars, vec!["x", "y", "z"]);
        assert_eq!(spec.cutoffs.n, Some(4));
        assert_eq!(
            spec.module,
            ModuleSpec::Coker {
                matrix: vec![vec!["x".into(), "y^2".into()], vec!["0".into(), "z".into()]],
                shifts: vec![0, 1]
            }
        );
        assert_eq!(SessionSpec::parse(&spec.serialize()).unwrap(), spec);
        let ring = spec.ring().unwrap();
        let m = spec.module(&ring, 10).unwrap();
        assert_eq!(m.relations().len(), 2);
    }

    #[test]
    fn errors_point_into_the_file() {
        let text = "vars = x, y\nideal = x^2, y^\n";
        let spec = SessionSpec::parse(text).unwrap();
        match spec.ring() {
            Err(Error::Parse { offset, message }) => {
                assert_eq!(offset, 2);
                assert!(message.contains("y^"));
            }
            other => panic!("{other:?}"),
        }
        match SessionSpec::parse("vars = x\nbogus = 1\n") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 16),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            SessionSpec::parse("char = 7\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            SessionSpec::parse("vars = x\nnonsense\n"),
            Err(Error::Parse { offset: 9, .. })
        ));
    }

    #[test]
    fn inhomogeneous_generators_are_named() {
        let spec = SessionSpec::parse("vars = x, y\nideal = x^2 + y\n").unwrap();
        match spec.ring() {
            Err(Error::Usage(m)) => assert!(m.contains("x^2 + y")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn corpus_blocks() {
        let text = "vars = x\nideal = x^3\ncheck.ineq = backelin\ncheck.c = 2\n---\nvars = x, y\n";
        let specs = SessionSpec::parse_many(text).unwrap();
        assert_eq!(specs.len(), 2);
        assert_eq!(
            specs[0].check.as_ref().unwrap().inequality,
            Inequality::Backelin
        );
        let bad = "vars = x\n---\nvars = x\nmodule.kind = nope\n";
        match SessionSpec::parse_many(bad) {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, bad.find("nope").unwrap()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn exported_modules_reparse() {
        let spec = SessionSpec::parse("char = 7\nvars = x, y\nideal = x^2 - 3*y^2\nmodule.kind = max-ideal-power\nmodule.s = 2\ntwist = 1\n").unwrap();
        let ring = spec.ring().unwrap();
        let m = spec.module(&ring, 12).unwrap();
        let exported = SessionSpec::from_module(&m);
        let again = SessionSpec::parse(&exported.serialize()).unwrap();
        assert_eq!(again, exported);
        let m2 = again.module(&again.ring().unwrap(), 12).unwrap();
        assert_eq!(m2.twist(), m.twist());
        for e in 0..6 {
            assert_eq!(
                m2.hilbert_function(e).unwrap(),
                m.hilbert_function(e).unwrap()
            );
        }
    }

    fn arb_spec() -> impl Strategy<Value = SessionSpec> {
        let names = prop::sample::subsequence(vec!["x", "y", "z", "w"], 1..=4);
        let module = prop_oneof![
            Just(ModuleSpec::ResidueField),
            (1i64..4).prop_map(|s| ModuleSpec::MaxIdealPower { s }),
            (1i64..4, 0i64..4).prop_map(|(c, d)| ModuleSpec::VeronesePiece { c, d }),
            prop::collection::vec(-2i64..3, 1..3).prop_map(|shifts| ModuleSpec::Coker {
                matrix: vec![vec!["x".to_string()]; shifts.len()],
                shifts
            }),
        ];
        (
            names,
            module,
            -3i64..3,
            prop::option::of(1usize..8),
            prop::option::of(0i64..30),
            prop::option::of(0i64..5),
            prop::sample::select(vec![3u32, 5, 7, 32003]),
        )
            .prop_map(|(names, module, twist, n, d, g, p)| SessionSpec {
                characteristic: p,
                ideal: vec![format!("{}^2", names[0])],
                vars: names.into_iter().map(String::from).collect(),
                module,
                twist,
                cutoffs: SpecCutoffs { n, d, g },
                check: None,
            })
    }

    proptest! {
        #[test]
        fn serialize_round_trips(spec in arb_spec()) {
            prop_assert_eq!(SessionSpec::parse(&spec.serialize()).unwrap(), spec);
        }
    }
}
