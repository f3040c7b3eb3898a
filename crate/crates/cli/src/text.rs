//! Human-readable renderings of library values.

use std::fmt::Write;

use seqcong::ideal::{
    ClosureVerdict, LSet, LinkConflict, LinkReport, LinkVerdict, LinkingCounterexample,
    ModulusFailure, ModulusVerdict, OrderEstimate,
};
use seqcong::{FrequencyMap, NNotation, Partition};

pub fn frequency_json(f: &FrequencyMap) -> String {
    let pairs: Vec<[u64; 2]> = f.iter().map(|(p, m)| [p, m]).collect();
    serde_json::json!({ "f": pairs }).to_string()
}

pub fn n_notation(n: &NNotation) -> String {
    let coeffs: Vec<String> = n.coeffs().iter().map(u64::to_string).collect();
    format!("[{}]_{{{}}}", coeffs.join(", "), n.spec())
}

fn list(ps: &[Partition]) -> String {
    let items: Vec<String> = ps.iter().map(Partition::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

pub fn closure(v: &ClosureVerdict) -> String {
    match v {
        ClosureVerdict::Closed { members_checked } => {
            format!("closed under part removal ({members_checked} members checked)")
        }
        ClosureVerdict::Counterexample(w) => format!(
            "not closed: {} is a member, removing {} gives {}, which is not",
            w.member, w.removed, w.result
        ),
    }
}

pub fn order(e: &OrderEstimate) -> String {
    match e {
        OrderEstimate::Finite { k } => format!("order {k} within bound"),
        OrderEstimate::GrowingWithBound {
            refuted_up_to,
            witness,
        } => format!(
            "every k ≤ {refuted_up_to} is refuted within bound; witness for k = {refuted_up_to}: {witness}"
        ),
    }
}

pub fn refutation(k: u64, witness: Option<&Partition>) -> String {
    match witness {
        Some(w) => format!("k = {k} refuted by {w}"),
        None => format!("no witness against k = {k} within bound"),
    }
}

pub fn modulus(m: u64, v: &ModulusVerdict) -> String {
    match v {
        ModulusVerdict::Holds { members_checked } => {
            format!("{m} is a modulus within bound ({members_checked} members checked)")
        }
        ModulusVerdict::Fails(w) => match w.failure {
            ModulusFailure::ShiftLeavesIdeal => format!(
                "{m} is not a modulus: {} is a member but its shift {} is not",
                w.member, w.image
            ),
            ModulusFailure::NotAShift => format!(
                "{m} is not a modulus: {} is a member with parts above {m} but {} is not",
                w.member, w.image
            ),
        },
    }
}

pub fn l_set(l: &LSet) -> String {
    let label = if l.is_finite() {
        "finite"
    } else {
        "reaches the length cap, possibly infinite"
    };
    format!(
        "L ({label}, {} members): {}",
        l.members().len(),
        list(l.members())
    )
}

pub fn link(r: &LinkReport) -> String {
    let mut out = String::new();
    let verdict = match r.verdict {
        LinkVerdict::LinkedWithinBound => "linked within bound",
        LinkVerdict::Refuted => "not linked",
        LinkVerdict::NoModulus => "modulus fails",
        LinkVerdict::LInfiniteWithinBound => "L reaches the length cap",
    };
    let _ = writeln!(
        out,
        "{} with modulus {} (max part {}, max length {}, span cap {}): {verdict}",
        r.ideal, r.modulus, r.bound.max_part, r.bound.max_length, r.span_cap
    );
    if let Some(w) = &r.modulus_witness {
        let _ = writeln!(out, "  modulus witness: {} ↦ {}", w.member, w.image);
    }
    if !r.l_set.is_empty() {
        let _ = writeln!(out, "  L = {}", list(&r.l_set));
    }
    for e in &r.entries {
        let _ = writeln!(
            out,
            "  {}: span {}, linking set {}",
            e.pi,
            e.span,
            list(&e.linking_set)
        );
    }
    for f in &r.failures {
        let _ = writeln!(out, "  {}: no span works", f.pi);
        for a in &f.attempts {
            for c in &a.conflicts {
                let line = match c {
                    LinkConflict::Unrepresentable { member } => {
                        format!("member {member} has no representation")
                    }
                    LinkConflict::SharedTail {
                        member,
                        non_member,
                        tail,
                    } => format!("member {member} and non-member {non_member} share tail {tail}"),
                };
                let _ = writeln!(out, "    span {}: {line}", a.span);
            }
        }
    }
    out.truncate(out.trim_end().len());
    out
}

pub fn counterexample(c: &LinkingCounterexample) -> String {
    format!(
        "r = {}, m = {}: {} is {} the ideal; {} is {}sequentially congruent",
        c.r,
        c.modulus,
        c.member,
        if c.member_in_ideal { "in" } else { "not in" },
        c.forced,
        if c.forced_sequentially_congruent {
            ""
        } else {
            "not "
        }
    )
}
