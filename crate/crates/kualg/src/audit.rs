//! Machine audit of the cut-set laws on a concrete instance.
//!
//! Several of the set-algebra laws around cuts circulate in a printed
//! form that their own worked examples refute: the meet law with a union
//! where only an intersection can hold, the covering law with an
//! intersection instead of a union, the Θ criterion with a union over the
//! wrong principal set. The audit evaluates every law in both forms —
//! `literal` exactly as printed, `corrected` as the examples force it to
//! be — over one algebra/function instance, exhaustively, and reports a
//! re-checkable witness for every failure.
//!
//! Corrected forms (and the literal forms that need no correction) are
//! theorems; the audit marks those entries `asserted`. Literal forms of
//! the faulty laws are kept purely as demonstrations.

use std::collections::BTreeSet;
use std::fmt;

use crate::function::{cut_matrix, principal_upset, KUFunction};

/// The audited laws, named by content.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Claim {
    /// `q*p = 0` implies the cut of `p` is contained in the cut of `q`.
    CutMonotone,
    /// Distinct image values have distinct cuts, and conversely.
    ImageInjective,
    /// Membership of `i` in the cut of `q` is equivalent to inclusion of
    /// the cut of `Ã(i)` in the cut of `q`.
    CutMembership,
    /// `Ã(x)*Ã(y) = 0` iff the cut of `Ã(y)` contains the cut of `Ã(x)`.
    ImageCutOrder,
    /// The cut of an infimum aggregates the cuts of the subset.
    MeetLaw,
    /// The meet law over every subset, under the premise that all meets
    /// exist.
    MeetLawComplete,
    /// When all meets exist, the intersection of two cuts is itself a cut.
    PairwiseClosure,
    /// The cuts jointly exhaust the domain.
    Cover,
    /// Aggregating all cuts through a fixed position reproduces the cut
    /// of the value there.
    MembershipClosure,
    /// Equal cuts are characterized by the principal set intersected with
    /// the image.
    ThetaDownset,
    /// Every Θ-class containing an image point has it as least element.
    ClassMinimum,
}

impl Claim {
    pub fn id(self) -> &'static str {
        match self {
            Claim::CutMonotone => "cut-monotone",
            Claim::ImageInjective => "image-injective",
            Claim::CutMembership => "cut-membership",
            Claim::ImageCutOrder => "image-cut-order",
            Claim::MeetLaw => "meet-law",
            Claim::MeetLawComplete => "meet-law-complete",
            Claim::PairwiseClosure => "pairwise-closure",
            Claim::Cover => "cover",
            Claim::MembershipClosure => "membership-closure",
            Claim::ThetaDownset => "theta-downset",
            Claim::ClassMinimum => "class-minimum",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    /// The law exactly as printed.
    Literal,
    /// The law as the worked examples require it.
    Corrected,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Literal => "literal",
            Variant::Corrected => "corrected",
        })
    }
}

/// Re-checkable counterexample: the algebra elements and domain positions
/// involved, plus a rendered explanation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub elements: Vec<usize>,
    pub positions: Vec<usize>,
    pub detail: String,
}

/// Verdict for one claim in one variant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditEntry {
    pub claim: Claim,
    pub variant: Variant,
    pub passed: bool,
    /// Whether this entry is a theorem expected to hold (exit-code
    /// relevant) or a demonstration of a printed defect.
    pub asserted: bool,
    /// True when the claim's premise fails on this instance and the claim
    /// holds vacuously.
    pub vacuous: bool,
    pub witness: Option<Witness>,
}

/// Configuration for [`audit_propositions`].
#[derive(Debug, Clone, Default)]
pub struct AuditConfig {
    /// Cap on the size of quantified subsets. `None` applies the default
    /// rule: exhaustive over all subsets when the algebra has at most 5
    /// elements, capped at 3 otherwise.
    pub max_subset: Option<usize>,
}

impl AuditConfig {
    pub fn effective_cap(&self, order: usize) -> usize {
        match self.max_subset {
            Some(cap) => cap,
            None if order <= 5 => order,
            None => 3,
        }
    }
}

/// Full audit outcome, entries in a fixed claim order.
#[derive(Debug, Clone)]
pub struct AuditReport {
    entries: Vec<AuditEntry>,
}

impl AuditReport {
    pub fn entries(&self) -> &[AuditEntry] {
        &self.entries
    }

    pub fn entry(&self, claim: Claim, variant: Variant) -> Option<&AuditEntry> {
        self.entries
            .iter()
            .find(|e| e.claim == claim && e.variant == variant)
    }

    /// True iff every theorem-grade entry passed.
    pub fn asserted_pass(&self) -> bool {
        self.entries.iter().filter(|e| e.asserted).all(|e| e.passed)
    }

    /// True iff every entry passed, the demonstrations included.
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }
}

struct Instance<'a> {
    f: &'a KUFunction,
    n: usize,
    m: usize,
    cuts: Vec<BTreeSet<usize>>,
    image_set: BTreeSet<usize>,
}

impl<'a> Instance<'a> {
    fn new(f: &'a KUFunction) -> Self {
        let matrix = cut_matrix(f);
        let n = f.algebra().order();
        let cuts = (0..n)
            .map(|q| matrix.positions(q).into_iter().collect())
            .collect();
        Instance {
            f,
            n,
            m: f.domain_size(),
            cuts,
            image_set: f.image_set(),
        }
    }

    fn leq(&self, x: usize, y: usize) -> bool {
        self.f.algebra().leq(x, y)
    }

    fn op(&self, x: usize, y: usize) -> usize {
        self.f.algebra().op(x, y)
    }

    fn full_domain(&self) -> BTreeSet<usize> {
        (0..self.m).collect()
    }

    fn fmt_positions(&self, set: &BTreeSet<usize>) -> String {
        let names: Vec<&str> = set.iter().map(|&i| self.f.labels()[i].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }

    fn fmt_elements(&self, elems: &[usize]) -> String {
        let names: Vec<String> = elems.iter().map(|e| e.to_string()).collect();
        format!("{{{}}}", names.join(","))
    }

    /// Nonempty subsets of the elements up to the size cap, sizes
    /// ascending, lexicographic within each size.
    fn subsets(&self, cap: usize) -> Vec<Vec<usize>> {
        fn grow(n: usize, size: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if current.len() == size {
                out.push(current.clone());
                return;
            }
            let start = current.last().map_or(0, |&l| l + 1);
            for next in start..n {
                current.push(next);
                grow(n, size, current, out);
                current.pop();
            }
        }
        let mut out = Vec::new();
        let mut current = Vec::new();
        for size in 1..=cap.min(self.n) {
            grow(self.n, size, &mut current, &mut out);
        }
        out
    }
}

/// Evaluates every claim in both variants on the instance. Quantified
/// subset claims range over nonempty subsets up to the configured cap.
pub fn audit_propositions(f: &KUFunction, config: &AuditConfig) -> AuditReport {
    let inst = Instance::new(f);
    let cap = config.effective_cap(inst.n);
    let complete = f.algebra().is_meet_complete();

    let entries = vec![
        cut_monotone(&inst),
        image_injective(&inst),
        cut_membership(&inst, Variant::Literal),
        cut_membership(&inst, Variant::Corrected),
        image_cut_order(&inst),
        meet_law(&inst, Variant::Literal, cap, Claim::MeetLaw, true),
        meet_law(&inst, Variant::Corrected, cap, Claim::MeetLaw, true),
        meet_law_complete(&inst, Variant::Literal, cap, complete),
        meet_law_complete(&inst, Variant::Corrected, cap, complete),
        pairwise_closure(&inst, complete),
        cover(&inst, Variant::Literal),
        cover(&inst, Variant::Corrected),
        membership_closure(&inst, Variant::Literal),
        membership_closure(&inst, Variant::Corrected),
        theta_downset(&inst, Variant::Literal),
        theta_downset(&inst, Variant::Corrected),
        class_minimum(&inst),
    ];
    AuditReport { entries }
}

fn entry(claim: Claim, variant: Variant, asserted: bool, witness: Option<Witness>) -> AuditEntry {
    AuditEntry {
        claim,
        variant,
        passed: witness.is_none(),
        asserted,
        vacuous: false,
        witness,
    }
}

fn cut_monotone(inst: &Instance) -> AuditEntry {
    let mut witness = None;
    'scan: for p in 0..inst.n {
        for q in 0..inst.n {
            if inst.op(q, p) == 0 && !inst.cuts[p].is_subset(&inst.cuts[q]) {
                witness = Some(Witness {
                    elements: vec![p, q],
                    positions: vec![],
                    detail: format!(
                        "q*p = 0 for (p,q)=({p},{q}) but cut({p})={} is not within cut({q})={}",
                        inst.fmt_positions(&inst.cuts[p]),
                        inst.fmt_positions(&inst.cuts[q]),
                    ),
                });
                break 'scan;
            }
        }
    }
    entry(Claim::CutMonotone, Variant::Literal, true, witness)
}

fn image_injective(inst: &Instance) -> AuditEntry {
    let mut witness = None;
    'scan: for x in 0..inst.m {
        for y in 0..inst.m {
            let vx = inst.f.value(x);
            let vy = inst.f.value(y);
            if (vx != vy) != (inst.cuts[vx] != inst.cuts[vy]) {
                witness = Some(Witness {
                    elements: vec![vx, vy],
                    positions: vec![x, y],
                    detail: format!(
                        "values ({vx},{vy}) at positions ({},{}) break the equivalence",
                        inst.f.labels()[x],
                        inst.f.labels()[y],
                    ),
                });
                break 'scan;
            }
        }
    }
    entry(Claim::ImageInjective, Variant::Literal, true, witness)
}

fn cut_membership(inst: &Instance, variant: Variant) -> AuditEntry {
    let mut witness = None;
    'scan: for x in 0..inst.m {
        for q in 0..inst.n {
            let v = inst.f.value(x);
            let lhs = match variant {
                Variant::Literal => inst.op(v, q) == 0,
                Variant::Corrected => inst.op(q, v) == 0,
            };
            if lhs != inst.cuts[v].is_subset(&inst.cuts[q]) {
                let product = match variant {
                    Variant::Literal => format!("{v}*{q}"),
                    Variant::Corrected => format!("{q}*{v}"),
                };
                witness = Some(Witness {
                    elements: vec![v, q],
                    positions: vec![x],
                    detail: format!(
                        "{product} = 0 is {lhs} but cut({v}) within cut({q}) is {}",
                        !lhs
                    ),
                });
                break 'scan;
            }
        }
    }
    entry(
        Claim::CutMembership,
        variant,
        variant == Variant::Corrected,
        witness,
    )
}

fn image_cut_order(inst: &Instance) -> AuditEntry {
    let mut witness = None;
    'scan: for x in 0..inst.m {
        for y in 0..inst.m {
            let vx = inst.f.value(x);
            let vy = inst.f.value(y);
            if (inst.op(vx, vy) == 0) != inst.cuts[vy].is_subset(&inst.cuts[vx]) {
                witness = Some(Witness {
                    elements: vec![vx, vy],
                    positions: vec![x, y],
                    detail: format!("pair ({vx},{vy}) breaks the equivalence"),
                });
                break 'scan;
            }
        }
    }
    entry(Claim::ImageCutOrder, Variant::Literal, true, witness)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Connective {
    Union,
    Intersection,
}

impl Connective {
    fn name(self) -> &'static str {
        match self {
            Connective::Union => "union",
            Connective::Intersection => "intersection",
        }
    }
}

fn aggregate(inst: &Instance, subset: &[usize], connective: Connective) -> BTreeSet<usize> {
    match connective {
        Connective::Union => subset
            .iter()
            .fold(BTreeSet::new(), |acc, &q| &acc | &inst.cuts[q]),
        Connective::Intersection => subset
            .iter()
            .fold(inst.full_domain(), |acc, &q| &acc & &inst.cuts[q]),
    }
}

fn meet_law(
    inst: &Instance,
    variant: Variant,
    cap: usize,
    claim: Claim,
    assert_corrected: bool,
) -> AuditEntry {
    // as printed the law aggregates with a union; only the intersection
    // can match the cut of the infimum
    let connective = match variant {
        Variant::Literal => Connective::Union,
        Variant::Corrected => Connective::Intersection,
    };
    let mut witness = None;
    for subset in inst.subsets(cap) {
        let inf = match inst.f.algebra().infimum(&subset).expect("subset nonempty") {
            Some(g) => g,
            None => continue,
        };
        let agg = aggregate(inst, &subset, connective);
        if inst.cuts[inf] != agg {
            witness = Some(Witness {
                elements: subset.clone(),
                positions: vec![],
                detail: format!(
                    "Y={}: cut(inf Y)=cut({inf})={} but the {} is {}",
                    inst.fmt_elements(&subset),
                    inst.fmt_positions(&inst.cuts[inf]),
                    connective.name(),
                    inst.fmt_positions(&agg),
                ),
            });
            break;
        }
    }
    entry(
        claim,
        variant,
        assert_corrected && variant == Variant::Corrected,
        witness,
    )
}

fn meet_law_complete(inst: &Instance, variant: Variant, cap: usize, complete: bool) -> AuditEntry {
    if !complete {
        return AuditEntry {
            claim: Claim::MeetLawComplete,
            variant,
            passed: true,
            asserted: variant == Variant::Corrected,
            vacuous: true,
            witness: None,
        };
    }
    meet_law(inst, variant, cap, Claim::MeetLawComplete, true)
}

fn pairwise_closure(inst: &Instance, complete: bool) -> AuditEntry {
    if !complete {
        return AuditEntry {
            claim: Claim::PairwiseClosure,
            variant: Variant::Corrected,
            passed: true,
            asserted: true,
            vacuous: true,
            witness: None,
        };
    }
    let mut witness = None;
    'scan: for p in 0..inst.n {
        for q in 0..inst.n {
            let meet = &inst.cuts[p] & &inst.cuts[q];
            if !inst.cuts.contains(&meet) {
                witness = Some(Witness {
                    elements: vec![p, q],
                    positions: vec![],
                    detail: format!(
                        "cut({p}) and cut({q}) intersect to {} which is no cut",
                        inst.fmt_positions(&meet)
                    ),
                });
                break 'scan;
            }
        }
    }
    entry(Claim::PairwiseClosure, Variant::Corrected, true, witness)
}

fn cover(inst: &Instance, variant: Variant) -> AuditEntry {
    // printed with an intersection over all cuts; only the union covers
    let connective = match variant {
        Variant::Literal => Connective::Intersection,
        Variant::Corrected => Connective::Union,
    };
    let all: Vec<usize> = (0..inst.n).collect();
    let agg = aggregate(inst, &all, connective);
    let witness = if agg == inst.full_domain() {
        None
    } else {
        Some(Witness {
            elements: vec![],
            positions: agg.iter().copied().collect(),
            detail: format!(
                "{} of all cuts is {}, not the whole domain",
                connective.name(),
                inst.fmt_positions(&agg)
            ),
        })
    };
    entry(
        Claim::Cover,
        variant,
        variant == Variant::Corrected,
        witness,
    )
}

fn membership_closure(inst: &Instance, variant: Variant) -> AuditEntry {
    // printed as a union of the cuts through a position; the intersection
    // is the one matching the cut of the value there
    let connective = match variant {
        Variant::Literal => Connective::Union,
        Variant::Corrected => Connective::Intersection,
    };
    let mut witness = None;
    for x in 0..inst.m {
        let through: Vec<usize> = (0..inst.n).filter(|&q| inst.cuts[q].contains(&x)).collect();
        let agg = aggregate(inst, &through, connective);
        let ok = match variant {
            Variant::Literal => inst.cuts.contains(&agg),
            Variant::Corrected => agg == inst.cuts[inst.f.value(x)],
        };
        if !ok {
            let detail = match variant {
                Variant::Literal => format!(
                    "union of cuts through {} is {}, which is no cut",
                    inst.f.labels()[x],
                    inst.fmt_positions(&agg)
                ),
                Variant::Corrected => format!(
                    "intersection of cuts through {} is {}, not cut({})",
                    inst.f.labels()[x],
                    inst.fmt_positions(&agg),
                    inst.f.value(x)
                ),
            };
            witness = Some(Witness {
                elements: vec![inst.f.value(x)],
                positions: vec![x],
                detail,
            });
            break;
        }
    }
    entry(
        Claim::MembershipClosure,
        variant,
        variant == Variant::Corrected,
        witness,
    )
}

fn theta_downset(inst: &Instance, variant: Variant) -> AuditEntry {
    let alg = inst.f.algebra();
    let side = |q: usize| -> BTreeSet<usize> {
        match variant {
            Variant::Literal => {
                let upset: BTreeSet<usize> = principal_upset(alg, q).into_iter().collect();
                &upset | &inst.image_set
            }
            Variant::Corrected => {
                let downset: BTreeSet<usize> = (0..inst.n).filter(|&x| inst.leq(x, q)).collect();
                &downset & &inst.image_set
            }
        }
    };
    let mut witness = None;
    'scan: for p in 0..inst.n {
        for q in 0..inst.n {
            if (inst.cuts[p] == inst.cuts[q]) != (side(p) == side(q)) {
                witness = Some(Witness {
                    elements: vec![p, q],
                    positions: vec![],
                    detail: format!("pair ({p},{q}) breaks the equivalence"),
                });
                break 'scan;
            }
        }
    }
    entry(
        Claim::ThetaDownset,
        variant,
        variant == Variant::Corrected,
        witness,
    )
}

fn class_minimum(inst: &Instance) -> AuditEntry {
    let mut witness = None;
    for x in 0..inst.m {
        let v = inst.f.value(x);
        let class: Vec<usize> = (0..inst.n)
            .filter(|&q| inst.cuts[q] == inst.cuts[v])
            .collect();
        if !class.iter().all(|&q| inst.leq(v, q)) {
            witness = Some(Witness {
                elements: class,
                positions: vec![x],
                detail: format!("image point {v} is not least in its class"),
            });
            break;
        }
    }
    entry(Claim::ClassMinimum, Variant::Corrected, true, witness)
}
