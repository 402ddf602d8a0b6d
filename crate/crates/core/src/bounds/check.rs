use std::collections::HashMap;
use std::sync::Arc;

use super::formulas::{aramova_rhs, backelin_rhs, mainthm_rhs, surjection_rate_rhs, versyz_rhs};
use super::report::{decide, slack, BoundReport, Inequality, Params, ReportCutoffs, Side, Verdict};
use crate::arith::{FreeVector, ModuleCtx};
use crate::error::{Error, Result};
use crate::resolution::{
    rat_from_residue_table, resolve_minimal, BettiTable, Cutoffs, Extended, ModulePresentation,
    RateValue, Rational, RingPresentation, TValue,
};
use crate::veronese::{veronese_module, veronese_ring, VeroneseCaps, VeroneseMap};

/// Evaluates inequalities over one ring, caching resolutions, Veronese maps
/// and Veronese modules.
pub struct Checker {
    ring: Arc<RingPresentation>,
    homological: usize,
    degree: Option<i64>,
    caps: VeroneseCaps,
    inject_rhs: bool,
    tables: HashMap<String, Arc<BettiTable>>,
    maps: HashMap<i64, Arc<VeroneseMap>>,
    pieces: HashMap<(String, i64, i64), Arc<ModulePresentation>>,
    powers: HashMap<i64, Arc<ModulePresentation>>,
}

/// A module and the label it is reported under.
#[derive(Clone, Debug)]
pub struct LabeledModule {
    pub label: String,
    pub module: ModulePresentation,
}

fn fingerprint(m: &ModulePresentation) -> String {
    let ctx = m.ctx();
    let rels: Vec<String> = m.relations().iter().map(|r| ctx.fmt(r)).collect();
    format!(
        "{}|{:?}|{}|{}|{:?}",
        m.ring().describe(),
        m.shifts(),
        m.twist(),
        rels.join(";"),
        m.relations_valid_through()
    )
}

fn rat_value(v: i64) -> RateValue {
    Extended::Finite(Rational::from_integer(v))
}

fn t_as_rate(t: TValue) -> RateValue {
    t.to_rational()
}

struct Comparison {
    index: Option<i64>,
    d: Option<i64>,
    lhs: Side,
    rhs: Side,
    verdict: Verdict,
}

fn severity(v: Verdict) -> u8 {
    match v {
        Verdict::Violated => 2,
        Verdict::Inconclusive => 1,
        Verdict::Satisfied => 0,
    }
}

/// Most severe verdict first, then least slack, then first index.
fn worst(cmps: Vec<Comparison>) -> Comparison {
    let key = |c: &Comparison| {
        let s = match (c.lhs.value, c.rhs.value) {
            (Some(Extended::NegInf), _) => None,
            (Some(Extended::Finite(l)), Some(Extended::Finite(r))) => Some(r - l),
            _ => Some(Rational::from_integer(i64::MIN / 2)),
        };
        (std::cmp::Reverse(severity(c.verdict)), s.is_none(), s)
    };
    cmps.into_iter()
        .enumerate()
        .min_by(|(ia, a), (ib, b)| key(a).cmp(&key(b)).then(ia.cmp(ib)))
        .map(|(_, c)| c)
        .expect("at least one comparison")
}

impl Checker {
    pub fn new(ring: Arc<RingPresentation>, homological: usize, degree: Option<i64>) -> Self {
        Checker {
            ring,
            homological,
            degree,
            caps: VeroneseCaps::default(),
            inject_rhs: false,
            tables: HashMap::new(),
            maps: HashMap::new(),
            pieces: HashMap::new(),
            powers: HashMap::new(),
        }
    }

    /// Test mode: every right-hand side is lowered by one.
    pub fn with_rhs_injection(mut self, on: bool) -> Self {
        self.inject_rhs = on;
        self
    }

    pub fn ring(&self) -> &Arc<RingPresentation> {
        &self.ring
    }

    pub fn homological_cutoff(&self) -> usize {
        self.homological
    }

    fn report_cutoffs(&self) -> ReportCutoffs {
        ReportCutoffs {
            n: self.homological,
            d: self.degree,
        }
    }

    /// The degree cutoff used for `m`: the configured one, or
    /// `3N + m(I) + max(0, t_0)`.
    pub fn degree_for(&self, m: &ModulePresentation) -> i64 {
        let t0 = m
            .prune_units()
            .generator_degrees()
            .into_iter()
            .max()
            .unwrap_or(0);
        match self.degree {
            Some(d) => d.max(t0),
            None => Cutoffs::default_degree(m.ring(), self.homological) + t0.max(0),
        }
    }

    pub fn table(&mut self, m: &ModulePresentation, homological: usize) -> Result<Arc<BettiTable>> {
        let key = format!("{}#{}", fingerprint(m), homological);
        if let Some(t) = self.tables.get(&key) {
            return Ok(t.clone());
        }
        let cut = Cutoffs::new(homological, self.degree_for(m));
        let (_, table) = resolve_minimal(m, cut)?;
        let table = Arc::new(table);
        self.tables.insert(key, table.clone());
        Ok(table)
    }

    fn residue_table(&mut self, ring: &Arc<RingPresentation>) -> Result<Arc<BettiTable>> {
        let k = ModulePresentation::residue_field(ring.clone());
        self.table(&k, self.homological + 1)
    }

    /// Backelin rate of `ring` over the window, with its truncation flag.
    pub fn rat(&mut self, ring: &Arc<RingPresentation>) -> Result<(RateValue, bool)> {
        let t = self.residue_table(ring)?;
        let r = rat_from_residue_table((*t).clone());
        Ok((r.value, r.lower_bound))
    }

    pub fn power(&mut self, s: i64) -> Result<Arc<ModulePresentation>> {
        if let Some(p) = self.powers.get(&s) {
            return Ok(p.clone());
        }
        let cap =
            Cutoffs::default_degree(&self.ring, self.homological).max(self.degree.unwrap_or(0)) + s;
        let p = Arc::new(ModulePresentation::power_of_maximal_ideal(
            self.ring.clone(),
            s,
            cap,
        )?);
        self.powers.insert(s, p.clone());
        Ok(p)
    }

    pub fn veronese(&mut self, c: i64) -> Result<Arc<VeroneseMap>> {
        if c < 1 {
            return Err(Error::usage("Veronese level must be at least 1"));
        }
        if let Some(v) = self.maps.get(&c) {
            return Ok(v.clone());
        }
        let v = Arc::new(veronese_ring(&self.ring, c, self.caps)?);
        self.maps.insert(c, v.clone());
        Ok(v)
    }

    /// `M^(c,d)` over `R^(c)`.
    pub fn piece(
        &mut self,
        m: &ModulePresentation,
        c: i64,
        d: i64,
    ) -> Result<Arc<ModulePresentation>> {
        let key = (fingerprint(m), c, d);
        if let Some(p) = self.pieces.get(&key) {
            return Ok(p.clone());
        }
        let v = self.veronese(c)?;
        let t0 = m
            .prune_units()
            .generator_degrees()
            .into_iter()
            .max()
            .unwrap_or(0);
        let cap = match self.degree {
            Some(d) => d,
            None => {
                Cutoffs::default_degree(v.target(), self.homological)
                    + crate::resolution::ceil_div(t0, c).max(0)
                    + 1
            }
        };
        let p = Arc::new(veronese_module(m, &v, d, cap)?);
        self.pieces.insert(key, p.clone());
        Ok(p)
    }

    /// `max_d rate_{R^(c)}(M^(c,d))` over the window.
    pub fn veronese_rate(&mut self, m: &ModulePresentation, c: i64) -> Result<(RateValue, bool)> {
        let mut best = Extended::NegInf;
        let mut trunc = false;
        for d in 0..c {
            let p = self.piece(m, c, d)?;
            let t = self.table(&p, self.homological)?;
            best = best.max(t.rate_truncated());
            trunc |= t.is_truncated();
        }
        Ok((best, trunc))
    }

    fn rate(&mut self, m: &ModulePresentation) -> Result<(RateValue, TValue, bool)> {
        let t = self.table(m, self.homological)?;
        Ok((t.rate_truncated(), t.t(0), t.is_truncated()))
    }

    fn require(p: Option<i64>, name: &str, min: i64) -> Result<i64> {
        match p {
            Some(v) if v >= min => Ok(v),
            Some(v) => Err(Error::usage(format!(
                "--{name} must be at least {min}, got {v}"
            ))),
            None => Err(Error::usage(format!("this inequality needs --{name}"))),
        }
    }

    /// Evaluates `ineq`; `m` is used by the inequalities about an arbitrary
    /// module (mainthm, aramova, ratineq).
    pub fn check(
        &mut self,
        ineq: Inequality,
        m: &LabeledModule,
        params: &Params,
    ) -> Result<BoundReport> {
        if !Arc::ptr_eq(m.module.ring(), &self.ring)
            && m.module.ring().describe() != self.ring.describe()
        {
            return Err(Error::usage("module is not over the checker's ring"));
        }
        let mut flags: Vec<String> = Vec::new();
        let mut label = m.label.clone();
        let mut used = Params::default();
        let cmp = match ineq {
            Inequality::MainThm | Inequality::Aramova => {
                let c = Self::require(params.c, "c", 1)?;
                used.c = Some(c);
                let (lhs, lt) = self.veronese_rate(&m.module, c)?;
                let (rate, t0, mt) = self.rate(&m.module)?;
                let (rat, rt) = self.rat(&self.ring.clone())?;
                let rhs = if ineq == Inequality::MainThm {
                    mainthm_rhs(rate, rat, t0, c).ok().map(Extended::Finite)
                } else {
                    let degree_zero = m
                        .module
                        .prune_units()
                        .generator_degrees()
                        .iter()
                        .all(|&g| g == 0);
                    let c_ok = rat.finite().is_none_or(|r| Rational::from_integer(c) >= r);
                    if !degree_zero || !c_ok {
                        flags.push("precondition-unmet".into());
                    } else if rat.finite().is_some() {
                        flags.push("precondition-windowed".into());
                    }
                    Some(rat_value(aramova_rhs(rate, c)))
                };
                let rhs_trunc = mt || (ineq == Inequality::MainThm && rt);
                single(
                    Side::new(lhs, lt),
                    Side {
                        value: rhs,
                        truncated: rhs_trunc,
                    },
                )
            }
            Inequality::MainThmPower => {
                let c = Self::require(params.c, "c", 1)?;
                let s = Self::require(params.s, "s", 1)?;
                used.c = Some(c);
                used.s = Some(s);
                let p = self.power(s)?;
                label = format!("m^{s}({s})");
                let (lhs, lt) = self.veronese_rate(&p, c)?;
                let (rat, rt) = self.rat(&self.ring.clone())?;
                let rhs = backelin_rhs(rat, c).ok().map(rat_value);
                single(
                    Side::new(lhs, lt),
                    Side {
                        value: rhs,
                        truncated: rt,
                    },
                )
            }
            Inequality::Maxi => {
                let s = Self::require(params.s, "s", 1)?;
                used.s = Some(s);
                label = format!("m^{s}({s}) vs m(1)");
                let ps = self.power(s)?;
                let p1 = self.power(1)?;
                let a = self.table(&ps, self.homological)?;
                let b = self.table(&p1, self.homological)?;
                let cmps = (0..=self.homological)
                    .map(|i| {
                        let lhs = Side::new(t_as_rate(a.t(i)), a.is_column_truncated(i));
                        let rhs = Side::new(t_as_rate(b.t(i)), b.is_column_truncated(i));
                        Comparison {
                            index: Some(i as i64),
                            d: None,
                            verdict: decide(lhs, rhs),
                            lhs,
                            rhs,
                        }
                    })
                    .collect();
                worst(cmps)
            }
            Inequality::VerSyz => {
                let c = Self::require(params.c, "c", 1)?;
                used.c = Some(c);
                label = "R^(c,d)".into();
                let p1 = self.power(1)?;
                let b = self.table(&p1, self.homological)?;
                let free = ModulePresentation::free(self.ring.clone(), vec![0]);
                let ds: Vec<i64> = match params.d {
                    Some(d) => vec![d],
                    None => (0..c).collect(),
                };
                let mut cmps = Vec::new();
                for d in ds {
                    let piece = self.piece(&free, c, d)?;
                    let a = self.table(&piece, self.homological)?;
                    for n in 0..=self.homological {
                        let lhs = Side::new(t_as_rate(a.t(n)), a.is_column_truncated(n));
                        let t: Vec<TValue> = (0..=n).map(|i| b.t(i)).collect();
                        let rt = (0..=n).any(|i| b.is_column_truncated(i));
                        let rhs = Side {
                            value: versyz_rhs(n, c, &t).ok().map(rat_value),
                            truncated: rt,
                        };
                        cmps.push(Comparison {
                            index: Some(n as i64),
                            d: Some(d),
                            verdict: decide(lhs, rhs),
                            lhs,
                            rhs,
                        });
                    }
                }
                worst(cmps)
            }
            Inequality::Backelin => {
                let c = Self::require(params.c, "c", 1)?;
                used.c = Some(c);
                label = "-".into();
                let v = self.veronese(c)?;
                let (lhs, lt) = self.rat(&v.target().clone())?;
                let (rat, rt) = self.rat(&self.ring.clone())?;
                let rhs = backelin_rhs(rat, c).ok().map(rat_value);
                single(
                    Side::new(lhs, lt),
                    Side {
                        value: rhs,
                        truncated: rt,
                    },
                )
            }
            Inequality::RegZero => {
                let c = Self::require(params.c, "c", 1)?;
                used.c = Some(c);
                label = "R^(c,d)".into();
                let (rat, _) = self.rat(&self.ring.clone())?;
                if rat.finite().is_some_and(|r| Rational::from_integer(c) < r) {
                    flags.push("precondition-unmet".into());
                } else if rat.finite().is_some() {
                    flags.push("precondition-windowed".into());
                }
                let free = ModulePresentation::free(self.ring.clone(), vec![0]);
                let ds: Vec<i64> = match params.d {
                    Some(d) => vec![d],
                    None => (0..c).collect(),
                };
                let mut cmps = Vec::new();
                for d in ds {
                    let piece = self.piece(&free, c, d)?;
                    let a = self.table(&piece, self.homological)?;
                    let lhs = Side::new(t_as_rate(a.regularity_truncated()), a.is_truncated());
                    let rhs = Side::exact(rat_value(0));
                    cmps.push(Comparison {
                        index: None,
                        d: Some(d),
                        verdict: decide(lhs, rhs),
                        lhs,
                        rhs,
                    });
                }
                worst(cmps)
            }
            Inequality::RatIneq => {
                let (lhs, _, lt) = self.rate(&m.module)?;
                let (rsm, rsr, t0, rt) = self.rates_over_cover(&m.module)?;
                let rhs = surjection_rate_rhs(rsm, rsr, t0);
                single(Side::new(lhs, lt), Side::new(rhs, rt))
            }
        };
        if let Some(d) = cmp.d {
            used.d = Some(d);
        }
        self.finish(ineq, label, used, cmp, flags)
    }

    fn finish(
        &self,
        ineq: Inequality,
        label: String,
        params: Params,
        cmp: Comparison,
        mut flags: Vec<String>,
    ) -> Result<BoundReport> {
        let mut rhs = cmp.rhs;
        if self.inject_rhs {
            rhs.value = rhs.value.map(|v| v.map(|r| r - 1));
            flags.push("rhs-injected".into());
        }
        let mut verdict = decide(cmp.lhs, rhs);
        if flags.iter().any(|f| f == "precondition-unmet") {
            verdict = Verdict::Satisfied;
        }
        if cmp.lhs.truncated {
            flags.push("lhs-truncated".into());
        }
        if rhs.truncated {
            flags.push("rhs-truncated".into());
        }
        if rhs.value.is_none() {
            flags.push("rhs-undefined".into());
        }
        flags.sort();
        flags.dedup();
        debug_assert!(
            self.inject_rhs
                || verdict == cmp.verdict
                || flags.iter().any(|f| f == "precondition-unmet")
        );
        Ok(BoundReport {
            inequality: ineq,
            ring: self.ring.describe(),
            module: label,
            params,
            index: cmp.index,
            lhs: cmp.lhs.value,
            rhs: rhs.value,
            verdict,
            slack: slack(cmp.lhs.value, rhs.value),
            cutoffs: self.report_cutoffs(),
            flags,
        })
    }

    /// `rate_S(M)`, `rate_S(R)` and `t_0(M)` over the polynomial cover `S`,
    /// resolved to the length of the Koszul complex.
    fn rates_over_cover(
        &mut self,
        m: &ModulePresentation,
    ) -> Result<(RateValue, RateValue, TValue, bool)> {
        let s = Arc::new(RingPresentation::polynomial_ring(
            *self.ring.ring().field(),
            self.ring.ring().names().to_vec(),
        )?);
        let len = self.ring.nvars().max(1);
        let ctx = m.ctx();
        let mut rels: Vec<FreeVector> = m.relations().to_vec();
        for l in 0..m.rank() {
            for g in self.ring.ideal() {
                rels.push(ctx.from_polys(&[(l, g)]));
            }
        }
        let ms = ModulePresentation::new(s.clone(), m.shifts().to_vec(), rels, m.twist())?
            .with_relations_valid_through(m.relations_valid_through());
        let cover = ModulePresentation::new(s.clone(), vec![0], Vec::new(), 0)?;
        let rmod = {
            let cctx = ModuleCtx::new(s.ring(), cover.free_module());
            let rels = self
                .ring
                .ideal()
                .iter()
                .map(|g| cctx.from_polys(&[(0, g)]))
                .collect();
            ModulePresentation::new(s.clone(), vec![0], rels, 0)?
        };
        let a = self.table(&ms, len)?;
        let b = self.table(&rmod, len)?;
        let t0 = self.table(m, self.homological)?.t(0);
        Ok((
            a.rate_truncated(),
            b.rate_truncated(),
            t0,
            a.is_truncated() || b.is_truncated(),
        ))
    }
}

fn single(lhs: Side, rhs: Side) -> Comparison {
    Comparison {
        index: None,
        d: None,
        verdict: decide(lhs, rhs),
        lhs,
        rhs,
    }
}
