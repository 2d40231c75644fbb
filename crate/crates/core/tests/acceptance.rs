mod common;

use common::{
    brute_cp_filters, corpus, count_covering_functors, count_rqf_morphisms, is_continuous_covering_functor,
    is_local_bisection, partial_injections,
};
use etale_core::crm::{l_vee, roundtrip_quantale, verify_adjunction_ii};
use etale_core::duality::{build_chi, build_omega_map, verify_adjunction_i};
use etale_core::functors::{c_object, omega_object};
use etale_core::order::enumerate_cp_filters;
use etale_core::topology::is_homeomorphism;
use etale_core::workbench::{
    crm_of, crm_stage, instance_sections, parse_document, rqf_document, rqf_of, serialize_document, topcat_of,
    validate_document, Body, Document,
};
use etale_core::{Limits, Status};
use std::process::ExitCode;
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn positive(doc: &Document) -> bool {
    doc.expected.as_ref().is_none_or(|e| e.pass)
}

fn categories() -> impl Iterator<Item = &'static Document> {
    corpus()
        .documents
        .iter()
        .filter(|d| positive(d) && matches!(d.body, Body::Category(_) | Body::TopCategory(_)))
}

fn quantales() -> impl Iterator<Item = &'static Document> {
    corpus()
        .documents
        .iter()
        .filter(|d| positive(d) && matches!(d.body, Body::Frame(_) | Body::Rqf(_)))
}

fn crms() -> impl Iterator<Item = &'static Document> {
    corpus()
        .documents
        .iter()
        .filter(|d| positive(d) && matches!(d.body, Body::Crm(_)))
}

fn within(elapsed: Duration, seconds: u64, what: &str) -> Result<(), String> {
    if elapsed <= Duration::from_secs(seconds) {
        Ok(())
    } else {
        Err(format!("{what} took {:.1} s, over {seconds} s", elapsed.as_secs_f64()))
    }
}

fn ensure(ok: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message())
    }
}

fn omega_axioms() -> Outcome {
    let limits = Limits::default();
    let start = Instant::now();
    let mut names = Vec::new();
    for doc in categories() {
        let om = omega_object(&topcat_of(doc).map_err(|e| format!("{}: {e}", doc.name))?, &limits)
            .map_err(|e| format!("{}: {e}", doc.name))?;
        ensure(om.report.is_pass(), || format!("{}: {}", doc.name, om.report.summary()))?;
        let reread = parse_document(&serialize_document(&rqf_document(&doc.name, &om.rqf)))
            .map_err(|e| format!("{}: {e}", doc.name))?;
        let again = validate_document(&reread);
        ensure(again.is_pass(), || format!("{} reread: {}", doc.name, again.summary()))?;
        names.push(format!("{}({})", doc.name, om.len()));
    }
    within(start.elapsed(), 60, "the axiom suite")?;
    Ok(format!("{} categories: {}", names.len(), names.join(" ")))
}

fn filter_oracle() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for doc in quantales() {
        let q = rqf_of(doc).map_err(|e| format!("{}: {e}", doc.name))?;
        if q.len() > 64 {
            continue;
        }
        let mut fast: Vec<Vec<usize>> = enumerate_cp_filters(&q)
            .iter()
            .map(|f| f.members(&q).ones().collect())
            .collect();
        fast.sort();
        let slow = brute_cp_filters(&q);
        ensure(fast == slow, || {
            format!(
                "{}: {} filters by meet-primes, {} by search",
                doc.name,
                fast.len(),
                slow.len()
            )
        })?;
        checked += 1;
    }
    within(start.elapsed(), 10, "filter enumeration")?;
    Ok(format!("{checked} lattices with at most 64 elements agree"))
}

fn pi_characterisation() -> Outcome {
    let limits = Limits::default();
    let mut counts = Vec::new();
    for doc in categories() {
        let tc = topcat_of(doc).map_err(|e| e.to_string())?;
        let om = omega_object(&tc, &limits).map_err(|e| e.to_string())?;
        if let Some(u) = (0..om.len()).find(|&u| om.is_pi(u) != is_local_bisection(tc.category(), om.open(u))) {
            return Err(format!("{}: open {u} disagrees", doc.name));
        }
        let pis = om.pi_list().len();
        if let Some(n) = doc.name.strip_prefix("pair").and_then(|n| n.parse::<u64>().ok()) {
            let want = partial_injections(n) as usize;
            ensure(pis == want, || {
                format!("{}: {pis} partial isometries, expected {want}", doc.name)
            })?;
            counts.push(format!("{}={pis}", doc.name));
        }
    }
    ensure(counts.len() == 3, || "pair groupoids missing from the corpus".into())?;
    Ok(format!("every corpus category; {}", counts.join(" ")))
}

fn compatibility() -> Outcome {
    let mut pairs = 0usize;
    let mut quantales_seen = 0;
    for doc in quantales() {
        let q = rqf_of(doc).map_err(|e| e.to_string())?;
        for &a in q.pi_list() {
            for &b in q.pi_list() {
                let lhs = q.is_pi(q.join(a, b));
                let rhs = q.mul(a, q.star(b)) == q.mul(b, q.star(a)) && q.mul(q.plus(b), a) == q.mul(q.plus(a), b);
                ensure(lhs == rhs, || format!("{}: pair ({a}, {b})", doc.name))?;
                pairs += 1;
            }
        }
        quantales_seen += 1;
    }
    Ok(format!("{pairs} pairs over {quantales_seen} quantal frames"))
}

fn chi_roundtrip() -> Outcome {
    let limits = Limits::default();
    let mut slowest = (String::new(), Duration::ZERO);
    let mut checked = 0;
    for doc in quantales() {
        let start = Instant::now();
        let q = rqf_of(doc).map_err(|e| e.to_string())?;
        let c = c_object(&q, &limits).map_err(|e| format!("{}: {e}", doc.name))?;
        let om = omega_object(&c, &limits).map_err(|e| format!("{}: {e}", doc.name))?;
        let chi = build_chi(&q, &c, &om);
        ensure(chi.is_isomorphism(), || {
            format!("{}: {}", doc.name, chi.report.summary())
        })?;
        let mut image = chi.map.clone();
        image.sort_unstable();
        image.dedup();
        ensure(image.len() == q.len() && om.len() == q.len(), || {
            format!("{}: not a bijection", doc.name)
        })?;
        let order_ok = (0..q.len())
            .all(|a| (0..q.len()).all(|b| q.leq(a, b) == om.open(chi.map[a]).is_subset(om.open(chi.map[b]))));
        ensure(order_ok, || format!("{}: order not reflected", doc.name))?;
        let elapsed = start.elapsed();
        if doc.name == "omega-pair3" {
            within(elapsed, 90, "omega-pair3")?;
        }
        if elapsed > slowest.1 {
            slowest = (doc.name.clone(), elapsed);
        }
        checked += 1;
    }
    Ok(format!(
        "{checked} quantal frames; slowest {} at {:.1} s",
        slowest.0,
        slowest.1.as_secs_f64()
    ))
}

fn omega_roundtrip() -> Outcome {
    let limits = Limits::default();
    let mut checked = 0;
    for doc in categories() {
        let tc = topcat_of(doc).map_err(|e| e.to_string())?;
        let om = omega_object(&tc, &limits).map_err(|e| e.to_string())?;
        let c = c_object(&om.rqf, &limits).map_err(|e| e.to_string())?;
        let w = build_omega_map(&tc, &om, &c);
        ensure(w.report.is_pass(), || format!("{}: {}", doc.name, w.report.summary()))?;
        let mut inverse = vec![usize::MAX; c.len()];
        for (x, &y) in w.map.iter().enumerate() {
            inverse[y] = x;
        }
        ensure(c.len() == tc.len() && !inverse.contains(&usize::MAX), || {
            format!("{}: not a bijection", doc.name)
        })?;
        ensure(
            is_continuous_covering_functor(&w.map, &tc, &c)
                && is_continuous_covering_functor(&inverse, &c, &tc)
                && is_homeomorphism(&w.map, tc.topology(), c.topology()),
            || format!("{}: not an isomorphism of topological categories", doc.name),
        )?;
        checked += 1;
    }
    Ok(format!("{checked} categories"))
}

fn adjunction_one() -> Outcome {
    let limits = Limits::default();
    let pairs: Vec<&(String, String)> = corpus()
        .adjunctions
        .iter()
        .filter(|(_, q)| !matches!(corpus().get(q).map(|d| &d.body), Some(Body::Crm(_))))
        .collect();
    ensure(pairs.iter().any(|(c, q)| c == "pair2" && q == "omega-pair2"), || {
        "pair2 with its opens is missing".into()
    })?;
    ensure(pairs.len() >= 3, || format!("only {} pairs", pairs.len()))?;
    let mut lines = Vec::new();
    for (c, q) in pairs {
        let start = Instant::now();
        let tc = topcat_of(corpus().get(c).unwrap()).map_err(|e| e.to_string())?;
        let rq = rqf_of(corpus().get(q).unwrap()).map_err(|e| e.to_string())?;
        let adj = verify_adjunction_i(&tc, &rq, &limits).map_err(|e| format!("{c}|{q}: {e}"))?;
        ensure(adj.report.is_pass(), || format!("{c}|{q}: {}", adj.report.summary()))?;
        let cq = c_object(&rq, &limits).map_err(|e| e.to_string())?;
        let oc = omega_object(&tc, &limits).map_err(|e| e.to_string())?;
        if let Some(n) = count_covering_functors(&tc, &cq, 5_000_000) {
            ensure(n == adj.functors.len(), || {
                format!("{c}|{q}: {n} functors by brute force")
            })?;
        }
        if let Some(n) = count_rqf_morphisms(&rq, &oc, 5_000_000) {
            ensure(n == adj.morphisms.len(), || {
                format!("{c}|{q}: {n} morphisms by brute force")
            })?;
        }
        within(start.elapsed(), 60, &format!("{c}|{q}"))?;
        lines.push(format!("{c}|{q}={}", adj.functors.len()));
    }
    Ok(lines.join(" "))
}

fn crm_translation() -> Outcome {
    let limits = Limits::default();
    let mut checked = 0;
    for doc in quantales() {
        let (report, _) = roundtrip_quantale(&rqf_of(doc).map_err(|e| e.to_string())?, &limits)
            .map_err(|e| format!("{}: {e}", doc.name))?;
        ensure(report.is_pass(), || format!("{}: {}", doc.name, report.summary()))?;
        checked += 1;
    }
    for doc in crms() {
        let report = crm_stage(doc, &limits).map_err(|e| format!("{}: {e}", doc.name))?;
        ensure(report.is_pass(), || format!("{}: {}", doc.name, report.summary()))?;
        let source = doc.name.strip_prefix("pi-").map(|n| format!("omega-{n}"));
        if let Some(om) = source.as_deref().and_then(|n| corpus().get(n)) {
            let lv = l_vee(&crm_of(doc).map_err(|e| e.to_string())?, &limits).map_err(|e| e.to_string())?;
            let want = rqf_of(om).map_err(|e| e.to_string())?.len();
            ensure(lv.len() == want, || {
                format!("{}: {} ideals, expected {want}", doc.name, lv.len())
            })?;
        }
        checked += 1;
    }
    Ok(format!("{checked} instances in both directions"))
}

fn adjunction_two() -> Outcome {
    let limits = Limits::default();
    let c = topcat_of(corpus().get("pair2").unwrap()).map_err(|e| e.to_string())?;
    let s = crm_of(corpus().get("pi-pair2").unwrap()).map_err(|e| e.to_string())?;
    let two = verify_adjunction_ii(&c, &s, &limits).map_err(|e| e.to_string())?;
    ensure(two.report.is_pass(), || two.report.summary())?;
    let counts = (two.functors.len(), two.morphisms.len());
    ensure(counts == two.first, || {
        format!("{counts:?} against {:?} through the translation", two.first)
    })?;
    let q = rqf_of(corpus().get("omega-pair2").unwrap()).map_err(|e| e.to_string())?;
    let one = verify_adjunction_i(&c, &q, &limits).map_err(|e| e.to_string())?;
    ensure(one.functors.len() == counts.0, || {
        "differs from the direct first adjunction".into()
    })?;
    Ok(format!("{} functors, {} callitic morphisms", counts.0, counts.1))
}

fn negatives() -> Outcome {
    let limits = Limits::default();
    let mut laws = Vec::new();
    for doc in corpus().documents.iter().filter(|d| !positive(d)) {
        let law = doc
            .expected
            .as_ref()
            .and_then(|e| e.law.clone())
            .ok_or(format!("{}: no law", doc.name))?;
        let sections = instance_sections(doc, &limits).map_err(|e| format!("{}: {e}", doc.name))?;
        let named = sections
            .iter()
            .filter_map(|s| s.report.get(&law))
            .any(|c| c.status == Status::Fail && c.witness.is_some());
        ensure(named, || format!("{}: {law} did not fail with a witness", doc.name))?;
        let bare = sections
            .iter()
            .flat_map(|s| s.report.failures())
            .find(|c| c.witness.is_none());
        ensure(bare.is_none(), || format!("{}: failure without witness", doc.name))?;
        laws.push(law);
    }
    ensure(laws.len() >= 10, || format!("only {} fixtures", laws.len()))?;
    laws.sort();
    laws.dedup();
    Ok(format!("{} distinct laws rejected with witnesses", laws.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            "opens of every corpus category form a restriction quantal frame",
            omega_axioms,
        ),
        ("completely prime filters agree with exhaustive search", filter_oracle),
        ("partial isometries are the open local bisections", pi_characterisation),
        ("joins of partial isometries and compatibility", compatibility),
        ("chi is an isomorphism", chi_roundtrip),
        ("omega is an isomorphism of topological categories", omega_roundtrip),
        ("first adjunction hom-set bijections", adjunction_one),
        ("monoid and quantal frame translations", crm_translation),
        ("second adjunction hom-set bijection", adjunction_two),
        ("negative fixtures rejected with witnesses", negatives),
    ];
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {title}: {detail} ({secs:.1} s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL {title}: {detail} ({secs:.1} s)", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
