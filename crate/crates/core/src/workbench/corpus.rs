use super::build::{category_document, crm_document, frame_document, rqf_document, topcat_document};
use super::document::{canonical, AlgebraDoc, Axioms, Body, Document, MapDoc};
use crate::crm::pi_restriction_monoid;
use crate::error::{Error, Result};
use crate::functors::omega_object;
use crate::limits::Limits;
use crate::order::{FiniteFrame, FinitePoset};
use crate::quantale::Rqf;
use crate::sets;
use crate::table::Table;
use crate::topcat::{FiniteCategory, TopCategory};
use crate::topology::Topology;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Generated instances and the pairs on which the adjunctions are checked,
/// by document name.
#[derive(Debug, Clone)]
pub struct Corpus {
    pub documents: Vec<Document>,
    pub adjunctions: Vec<(String, String)>,
}

impl Corpus {
    pub fn get(&self, name: &str) -> Option<&Document> {
        self.documents.iter().find(|d| d.name == name)
    }
}

fn table(n: usize, f: impl Fn(usize, usize) -> usize + Sync) -> Table {
    Table::from_fn(n, f)
}

fn small_monoids() -> Vec<(&'static str, Table, usize)> {
    vec![
        ("trivial-monoid", table(1, |_, _| 0), 0),
        ("z2", table(2, |a, b| (a + b) % 2), 0),
        ("z3", table(3, |a, b| (a + b) % 3), 0),
        ("idempotent-monoid", table(2, |a, b| a.max(b)), 0),
        (
            "z2-with-zero",
            table(3, |a, b| if a == 2 || b == 2 { 2 } else { (a + b) % 2 }),
            0,
        ),
    ]
}

type Graph = (&'static str, usize, &'static [(usize, usize)]);

/// Name, object count and edges of each free-category graph.
fn free_graphs() -> [Graph; 5] {
    [
        ("free-edge", 2, &[(0, 1)]),
        ("free-path", 3, &[(0, 1), (1, 2)]),
        ("free-parallel", 2, &[(0, 1), (0, 1)]),
        ("free-span", 3, &[(0, 1), (0, 2)]),
        ("free-triangle", 3, &[(0, 1), (1, 2), (0, 2)]),
    ]
}

/// Down-sets of a random order on `k` points: a random finite distributive
/// lattice.
fn random_frame(rng: &mut ChaCha8Rng, k: usize) -> FiniteFrame {
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            if rng.random_bool(0.4) {
                edges.push((i, j));
            }
        }
    }
    let p = FinitePoset::from_covers(k, &edges);
    let downsets: Vec<_> = (0..1usize << k)
        .map(|mask| sets::set_of(k, (0..k).filter(|&i| mask >> i & 1 == 1)))
        .filter(|s| s.ones().all(|i| p.down_set(i).is_subset(s)))
        .collect();
    let order = FinitePoset::from_fn(downsets.len(), |a, b| downsets[a].is_subset(&downsets[b]));
    FiniteFrame::from_poset(order).expect("down-set lattices are distributive")
}

fn algebra(doc: &Document) -> AlgebraDoc {
    match &doc.body {
        Body::Frame(a) | Body::Rqf(a) | Body::Crm(a) | Body::Quantale(a) | Body::Poset(a) => a.clone(),
        _ => unreachable!("algebra document"),
    }
}

fn full_order(p: &FinitePoset) -> Vec<[usize; 2]> {
    p.pairs().into_iter().map(|(i, j)| [i, j]).collect()
}

fn poset_doc(name: &str, size: usize, order: Vec<[usize; 2]>) -> Document {
    Document::new(
        name,
        Body::Poset(AlgebraDoc {
            size,
            order: Some(order),
            ..AlgebraDoc::default()
        }),
    )
}

fn negatives(limits: &Limits) -> Result<Vec<Document>> {
    let mut out = Vec::new();
    let chain2 = full_order(&FinitePoset::chain(2));
    let chain3 = full_order(&FinitePoset::chain(3));

    let mut order = chain2.clone();
    order.push([1, 0]);
    out.push(poset_doc("neg-poset-antisymmetry", 2, order).expecting(false, Some("poset.antisymmetric")));
    let order = chain3.iter().copied().filter(|&p| p != [0, 2]).collect();
    out.push(poset_doc("neg-poset-transitivity", 3, order).expecting(false, Some("poset.transitive")));
    let order = chain2.iter().copied().filter(|&p| p != [1, 1]).collect();
    out.push(poset_doc("neg-poset-reflexivity", 2, order).expecting(false, Some("poset.reflexive")));

    let frame_doc = |name: &str, size: usize, covers: Vec<[usize; 2]>| {
        Document::new(
            name,
            Body::Frame(AlgebraDoc {
                size,
                covers: Some(covers),
                ..AlgebraDoc::default()
            }),
        )
    };
    out.push(
        frame_doc(
            "neg-lattice-join",
            6,
            vec![[0, 1], [0, 2], [1, 3], [2, 3], [1, 4], [2, 4], [3, 5], [4, 5]],
        )
        .expecting(false, Some("lattice.joins_exist")),
    );
    out.push(
        frame_doc("m3-lattice", 5, vec![[0, 1], [0, 2], [0, 3], [1, 4], [2, 4], [3, 4]])
            .expecting(false, Some("frame.distributive")),
    );
    out.push(
        frame_doc("n5-lattice", 5, vec![[0, 1], [1, 2], [0, 3], [2, 4], [3, 4]])
            .expecting(false, Some("frame.distributive")),
    );

    let c3 = FiniteFrame::chain(3);
    let mut meet = c3.meet_table().rows();
    meet[2][1] = 0;
    let doc = Document::new(
        "neg-frame-meet",
        Body::Frame(AlgebraDoc {
            size: 3,
            covers: Some(vec![[0, 1], [1, 2]]),
            meet: Some(meet),
            join: Some(c3.join_table().rows()),
            ..AlgebraDoc::default()
        }),
    );
    out.push(doc.expecting(false, Some("lattice.meet_glb")));

    let c2 = FiniteFrame::chain(2);
    let mut mul = c2.meet_table().rows();
    mul[1][1] = 0;
    let doc = Document::new(
        "neg-quantale-unit",
        Body::Quantale(AlgebraDoc {
            size: 2,
            covers: Some(vec![[0, 1]]),
            mul: Some(mul),
            unit: Some(1),
            ..AlgebraDoc::default()
        }),
    );
    out.push(doc.expecting(false, Some("quantale.unit")));

    let z2 = TopCategory::discrete(FiniteCategory::monoid(&table(2, |a, b| (a + b) % 2), 0));
    let om = omega_object(&z2, limits)?;
    let g = om.index_of(&sets::set_of(2, [1])).expect("open");
    let mut a = algebra(&rqf_document("", &om.rqf));
    a.mul.as_mut().expect("rqf")[g][g] = g;
    let quantale = AlgebraDoc {
        star: None,
        plus: None,
        ..a
    };
    out.push(
        Document::new("neg-quantale-distributive", Body::Quantale(quantale))
            .expecting(false, Some("quantale.left_distributive")),
    );

    let pair2 = TopCategory::discrete(FiniteCategory::pair_groupoid(2));
    let om2 = omega_object(&pair2, limits)?;
    let mut a = algebra(&rqf_document("", &om2.rqf));
    let top = om2.rqf.top();
    let some_pi = om2
        .rqf
        .pi_list()
        .iter()
        .copied()
        .find(|&p| !om2.rqf.is_projection(p))
        .expect("non-projection");
    a.star.as_mut().expect("rqf")[some_pi] = top;
    out.push(Document::new("neg-ehresmann-star", Body::Rqf(a)).expecting(false, Some("ehresmann.star_in_projections")));

    let doc = Document::new(
        "neg-rqf-etale",
        Body::Rqf(AlgebraDoc {
            size: 3,
            covers: Some(vec![[0, 1], [1, 2]]),
            mul: Some(table(3, |a, b| if a == 0 || b == 0 { 0 } else { a.max(b) }).rows()),
            unit: Some(1),
            star: Some(vec![0, 1, 1]),
            plus: Some(vec![0, 1, 1]),
            ..AlgebraDoc::default()
        }),
    );
    out.push(doc.expecting(false, Some("rqf.etale")));

    let pair_doc = category_document("", pair2.category());
    let Body::Category(base) = &pair_doc.body else {
        unreachable!()
    };
    let mut c = base.clone();
    let i = c.comp.iter().position(|t| t[0] == 1 && t[1] == 2).expect("composable");
    c.comp[i][2] = 3;
    out.push(Document::new("neg-category-composite", Body::Category(c)).expecting(false, Some("category.composite_d")));
    let mut c = base.clone();
    c.d[1] = 1;
    out.push(Document::new("neg-category-domain", Body::Category(c)).expecting(false, Some("category.d_is_identity")));

    let mut c = base.clone();
    c.subbase = Some(vec![vec![0]]);
    out.push(
        Document::new("neg-topcat-continuity", Body::TopCategory(c)).expecting(false, Some("topcat.d_continuous")),
    );
    let z2_indiscrete = TopCategory::new(z2.category().clone(), Topology::indiscrete(2)).expect("continuous");
    out.push(topcat_document("neg-topcat-etale", &z2_indiscrete).expecting(false, Some("etale.bisection_base")));
    let non_t0 = TopCategory::new(FiniteCategory::discrete(2), Topology::indiscrete(2)).expect("continuous");
    out.push(topcat_document("neg-non-sober", &non_t0).expecting(false, Some("omega.bijective")));

    let (_, pb, carrier) = pi_restriction_monoid(&om2.rqf);
    let pb = pb.expect("partial bijections");
    let find = |arrows: &[usize]| {
        let target = sets::set_of(4, arrows.iter().copied());
        carrier
            .iter()
            .position(|&c| *om2.open(c) == target)
            .expect("partial isometry")
    };
    let (single, swap) = (find(&[1]), find(&[1, 2]));
    let mut a = algebra(&crm_document("", &pb));
    a.covers = None;
    a.order = Some(
        full_order(pb.order())
            .into_iter()
            .filter(|&p| p != [single, swap])
            .collect(),
    );
    out.push(Document::new("neg-crm-join", Body::Crm(a)).expecting(false, Some("crm.compatible_joins")));

    let functor = Body::Functor(MapDoc {
        source: Box::new(category_document("pair2", pair2.category())),
        target: Box::new(category_document("trivial-monoid", &FiniteCategory::discrete(1))),
        map: vec![0; 4],
    });
    out.push(Document::new("neg-functor-covering", functor).expecting(false, Some("functor.d_injective")));

    let c3_doc = frame_document("chain3", &c3);
    let morphism = Body::Morphism(
        Axioms::Frame,
        MapDoc {
            source: Box::new(c3_doc.clone()),
            target: Box::new(c3_doc),
            map: vec![0, 2, 1],
        },
    );
    out.push(Document::new("neg-morphism-joins", morphism).expecting(false, Some("morphism.joins")));

    let two = Rqf::from_frame(FiniteFrame::chain(2));
    let (_, two_crm, _) = pi_restriction_monoid(&two);
    let inclusion = Body::Morphism(
        Axioms::Callitic,
        MapDoc {
            source: Box::new(crm_document("projections", &two_crm.expect("chain"))),
            target: Box::new(crm_document("partial-bijections-2", &pb)),
            map: vec![pb.zero(), pb.unit()],
        },
    );
    out.push(Document::new("neg-morphism-proper", inclusion).expecting(false, Some("crm_morphism.proper")));
    Ok(out)
}

/// Pair groupoids, free categories on small acyclic graphs, small monoids,
/// a Sierpiński-topologised category, frames including seeded random ones,
/// the images of the categories under `Ω`, partial-isometry monoids, and
/// one perturbed fixture per axiom class.
pub fn generate_corpus(seed: u64, limits: &Limits) -> Result<Corpus> {
    if limits.max_arrows < 9 || limits.max_elements < 512 {
        return Err(Error::bound(
            "corpus instance",
            512,
            limits.max_elements.min(limits.max_arrows),
        ));
    }
    let mut documents = Vec::new();
    let mut categories: Vec<(String, TopCategory)> = Vec::new();
    categories.push(("empty".into(), TopCategory::discrete(FiniteCategory::empty())));
    for n in 1..=3 {
        categories.push((
            format!("pair{n}"),
            TopCategory::discrete(FiniteCategory::pair_groupoid(n)),
        ));
    }
    for (name, objects, edges) in free_graphs() {
        let (cat, _) = FiniteCategory::free(objects, edges)?;
        categories.push((name.into(), TopCategory::discrete(cat)));
    }
    for (name, mul, unit) in small_monoids() {
        categories.push((name.into(), TopCategory::discrete(FiniteCategory::monoid(&mul, unit))));
    }
    let sierpinski = Topology::generated_by(2, &[sets::set_of(2, [0])]);
    let sierpinski = TopCategory::new(FiniteCategory::discrete(2), sierpinski).expect("continuous");
    categories.push(("sierpinski".into(), sierpinski));

    for (name, tc) in &categories {
        let doc = if tc.topology().is_discrete() {
            category_document(name, tc.category())
        } else {
            topcat_document(name, tc)
        };
        documents.push(doc.expecting(true, None));
    }
    let mut frames: Vec<(String, FiniteFrame)> = vec![
        ("chain2".into(), FiniteFrame::chain(2)),
        ("chain3".into(), FiniteFrame::chain(3)),
        ("chain4".into(), FiniteFrame::chain(4)),
        ("boolean1".into(), FiniteFrame::boolean(1)),
        ("boolean2".into(), FiniteFrame::boolean(2)),
        ("boolean3".into(), FiniteFrame::boolean(3)),
        (
            "chain2xchain3".into(),
            FiniteFrame::chain(2).product(&FiniteFrame::chain(3)),
        ),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..3 {
        frames.push((format!("random-frame-{i}"), random_frame(&mut rng, 4)));
    }
    for (name, f) in &frames {
        documents.push(frame_document(name, f).expecting(true, None));
    }
    for (name, tc) in categories.iter().filter(|(n, _)| n != "empty") {
        let om = omega_object(tc, limits)?;
        documents.push(rqf_document(&format!("omega-{name}"), &om.rqf).expecting(true, None));
    }
    let empty = omega_object(&categories[0].1, limits)?;
    documents.push(rqf_document("trivial", &empty.rqf).expecting(true, None));
    for name in ["pair2", "pair3", "z2", "free-path", "sierpinski"] {
        let tc = &categories.iter().find(|(n, _)| n == name).expect("listed").1;
        let om = omega_object(tc, limits)?;
        let (_, s, _) = pi_restriction_monoid(&om.rqf);
        let s = s.expect("partial isometries form a complete restriction monoid");
        documents.push(crm_document(&format!("pi-{name}"), &s).expecting(true, None));
    }
    let (_, trivial, _) = pi_restriction_monoid(&empty.rqf);
    documents.push(crm_document("trivial-crm", &trivial.expect("one element")).expecting(true, None));
    let boolean2 = Rqf::from_frame(FiniteFrame::boolean(2));
    let (_, s, _) = pi_restriction_monoid(&boolean2);
    documents.push(crm_document("pi-boolean2", &s.expect("frame")).expecting(true, None));
    documents.extend(negatives(limits)?);

    let pairs = [
        ("pair2", "omega-pair2"),
        ("pair1", "omega-pair2"),
        ("z2", "omega-z2"),
        ("free-edge", "omega-free-edge"),
        ("sierpinski", "omega-sierpinski"),
        ("empty", "trivial"),
        ("pair2", "pi-pair2"),
        ("empty", "pi-pair2"),
        ("z2", "pi-z2"),
        ("sierpinski", "pi-sierpinski"),
    ];
    Ok(Corpus {
        documents: documents.iter().map(canonical).collect(),
        adjunctions: pairs.iter().map(|&(c, q)| (c.into(), q.into())).collect(),
    })
}
