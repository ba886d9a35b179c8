//! JSON documents written by `--emit` and printed on counterexamples. The
//! schema is described in `docs/formats.md`.

use monideal::decomposition::{
    GrowthCertificate, GrowthKind, LocalizationCheck, PrimaryComponent, StrictScan,
};
use monideal::katzman::{GrowthExponent, KatzmanCertificate};
use monideal::regularity::{
    BettiTable, CoefficientField, PowerRegularityVerification, RegularityBoundReport,
};
use monideal::{MonomialIdeal, Ring};
use serde::Serialize;

fn names(ring: &Ring, vars: &[usize]) -> Vec<String> {
    vars.iter().map(|&v| ring.name(v).to_string()).collect()
}

fn field_name(f: CoefficientField) -> String {
    match f {
        CoefficientField::Rationals => "QQ".to_string(),
        CoefficientField::Prime(p) => format!("F{p}"),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentDoc {
    pub ideal: String,
    pub index_monomials: Vec<String>,
    pub radical: String,
    pub exponent_index: u64,
}

impl ComponentDoc {
    pub fn new(ring: &Ring, q: &PrimaryComponent) -> Self {
        ComponentDoc {
            ideal: q.ideal().to_string(),
            index_monomials: q
                .pieces()
                .iter()
                .map(|c| c.index_monomial().display(ring).to_string())
                .collect(),
            radical: q.radical().to_string(),
            exponent_index: q.exponent_index(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct StrictScanDoc {
    pub l_strict: u32,
    pub rows: Vec<StrictRowDoc>,
    pub first_holding: Option<u32>,
}

#[derive(Debug, Clone, Serialize)]
pub struct StrictRowDoc {
    pub n_or_q: u32,
    pub bound: u64,
    pub max_exponent_index: u64,
    pub holds: bool,
}

impl From<&StrictScan> for StrictScanDoc {
    fn from(s: &StrictScan) -> Self {
        StrictScanDoc {
            l_strict: s.l_strict,
            rows: s
                .rows
                .iter()
                .map(|&(v, bound, worst, holds)| StrictRowDoc {
                    n_or_q: v,
                    bound,
                    max_exponent_index: worst,
                    holds,
                })
                .collect(),
            first_holding: s.first_holding,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GrowthDoc {
    pub ideal: String,
    pub kind: &'static str,
    pub n_or_q: u32,
    pub l: u32,
    pub d: usize,
    pub bound: u64,
    pub holds: bool,
    pub components: Vec<ComponentDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strict: Option<StrictScanDoc>,
}

impl GrowthDoc {
    pub fn new(c: &GrowthCertificate) -> Self {
        let ring = c.ideal_described.ring();
        let (kind, v) = match c.kind {
            GrowthKind::Ordinary(n) => ("ordinary", n),
            GrowthKind::Frobenius(q) => ("frobenius", q),
        };
        GrowthDoc {
            ideal: c.ideal_described.to_string(),
            kind,
            n_or_q: v,
            l: c.l,
            d: c.d,
            bound: c.bound,
            holds: c.holds(),
            components: c
                .per_component
                .iter()
                .map(|(q, _)| ComponentDoc::new(ring, q))
                .collect(),
            strict: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LocalizationDoc {
    pub i: String,
    pub j: String,
    pub u: String,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

impl LocalizationDoc {
    pub fn new(
        i: &MonomialIdeal,
        j: &MonomialIdeal,
        u: &monideal::Monomial,
        c: &LocalizationCheck,
    ) -> Self {
        LocalizationDoc {
            i: i.to_string(),
            j: j.to_string(),
            u: u.display(i.ring()).to_string(),
            lhs: c.lhs.to_string(),
            rhs: c.rhs.to_string(),
            holds: c.holds(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BettiEntryDoc {
    pub i: usize,
    pub multidegree: String,
    pub degree: u64,
    pub rank: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct BettiDoc {
    pub ideal: String,
    pub field: String,
    pub entries: Vec<BettiEntryDoc>,
    pub totals: Vec<u64>,
    pub regularity: i64,
}

impl BettiDoc {
    pub fn new(i: &MonomialIdeal, t: &BettiTable) -> Self {
        BettiDoc {
            ideal: i.to_string(),
            field: field_name(t.field),
            entries: t
                .entries
                .iter()
                .map(|((k, m), &rank)| BettiEntryDoc {
                    i: *k,
                    multidegree: m.display(i.ring()).to_string(),
                    degree: m.degree(),
                    rank,
                })
                .collect(),
            totals: t.totals(),
            regularity: t.regularity(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessDoc {
    pub subset: Vec<String>,
    pub pivot: String,
    pub sub_ideal: String,
    pub sub_regularity: i64,
    pub value: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct RegBoundDoc {
    pub ideals: Vec<String>,
    pub field: String,
    pub l: u32,
    pub d: usize,
    pub m: usize,
    pub r: usize,
    pub radical_variables: Vec<String>,
    #[serde(rename = "L")]
    pub big_l: Option<i64>,
    #[serde(rename = "B")]
    pub bound: i64,
    pub witnesses: Vec<WitnessDoc>,
}

impl RegBoundDoc {
    pub fn new(rep: &RegularityBoundReport, field: CoefficientField) -> Self {
        let ring = rep.ideals[0].ring();
        RegBoundDoc {
            ideals: rep.ideals.iter().map(ToString::to_string).collect(),
            field: field_name(field),
            l: rep.l,
            d: rep.d,
            m: rep.ideals.len(),
            r: rep.r,
            radical_variables: names(ring, &rep.radical_variables),
            big_l: rep.big_l,
            bound: rep.bound,
            witnesses: rep
                .witnesses
                .iter()
                .map(|w| WitnessDoc {
                    subset: names(ring, &w.subset),
                    pivot: ring.name(w.pivot).to_string(),
                    sub_ideal: w.sub_ideal.to_string(),
                    sub_regularity: w.sub_regularity,
                    value: w.value,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PowerRowDoc {
    pub n: u32,
    pub regularity: i64,
    pub bound: i64,
    pub stable_bound: Option<i64>,
    pub slack_ratio: String,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyRegDoc {
    pub report: RegBoundDoc,
    pub rows: Vec<PowerRowDoc>,
    pub holds: bool,
}

impl VerifyRegDoc {
    pub fn new(v: &PowerRegularityVerification, field: CoefficientField) -> Self {
        VerifyRegDoc {
            report: RegBoundDoc::new(&v.report, field),
            rows: v
                .rows
                .iter()
                .map(|r| PowerRowDoc {
                    n: r.n,
                    regularity: r.regularity,
                    bound: r.bound,
                    stable_bound: r.stable_bound,
                    // fixed precision keeps the document byte-stable
                    slack_ratio: format!("{:.4}", r.slack_ratio()),
                    holds: r.holds(),
                })
                .collect(),
            holds: v.holds(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct KWitnessDoc {
    pub role: String,
    pub poly: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct KCheckDoc {
    pub label: String,
    pub claim: String,
    pub holds: bool,
    pub witnesses: Vec<KWitnessDoc>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub note: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct KGrowthDoc {
    pub component: String,
    pub least_power: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct KatzmanDoc {
    pub p: u64,
    pub e: u32,
    pub q: u64,
    pub tau: String,
    #[serde(rename = "G")]
    pub g: String,
    pub i_q: Vec<String>,
    pub j_q: Vec<String>,
    pub sigma: Vec<String>,
    pub components: Vec<Vec<String>>,
    pub checks: Vec<KCheckDoc>,
    pub j_q_matches_q_minus_1: bool,
    pub j_q_matches_q_minus_2: bool,
    pub bound: u64,
    pub growth: Vec<KGrowthDoc>,
    pub growth_exponent: u64,
    pub certified: bool,
}

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

impl KatzmanDoc {
    pub fn new(c: &KatzmanCertificate, g: Option<&GrowthExponent>) -> Self {
        let k = &c.instance;
        KatzmanDoc {
            p: k.p,
            e: k.e,
            q: k.q,
            tau: k.tau.to_string(),
            g: k.g.to_string(),
            i_q: strings(k.i_q.generators()),
            j_q: strings(k.j_q.basis()),
            sigma: strings(&k.sigma),
            components: k.components.iter().map(|q| strings(q.basis())).collect(),
            checks: c
                .checks
                .iter()
                .map(|ch| KCheckDoc {
                    label: ch.label.to_string(),
                    claim: ch.claim.clone(),
                    holds: ch.holds,
                    witnesses: ch
                        .witnesses
                        .iter()
                        .map(|w| KWitnessDoc {
                            role: w.role.clone(),
                            poly: w.poly.clone(),
                        })
                        .collect(),
                    note: ch.note.clone(),
                })
                .collect(),
            j_q_matches_q_minus_1: c.rendering.q_minus_1,
            j_q_matches_q_minus_2: c.rendering.q_minus_2,
            bound: c.bound,
            growth: g
                .map(|g| {
                    g.per_component
                        .iter()
                        .map(|(component, n)| KGrowthDoc {
                            component: component.clone(),
                            least_power: *n,
                        })
                        .collect()
                })
                .unwrap_or_default(),
            growth_exponent: g.map_or(0, |g| g.value),
            certified: c.certified() && g.is_some_and(|g| g.value <= 2),
        }
    }
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}
