mod common;

use std::collections::BTreeSet;
use std::sync::Arc;

use classprod::corpus::{
    build_report, cayley_to_group, collect_group_files, group_to_cayley, parse_report, GroupFile,
};
use classprod::{ClassTable, HypothesisKind, Lab};
use common::{corpus_dir, load};

#[test]
fn every_file_validates_and_sits_under_its_order() {
    let files = collect_group_files(&corpus_dir(), None).unwrap();
    assert!(files.len() > 90, "corpus has {} files", files.len());
    for path in files {
        let l = load(&path);
        let dir: usize = path
            .parent()
            .and_then(|p| p.file_name())
            .and_then(|n| n.to_str())
            .and_then(|n| n.parse().ok())
            .unwrap_or_else(|| panic!("{} not under an order directory", path.display()));
        assert_eq!(l.table.group().order(), dir, "{}", path.display());
        assert_eq!(
            path.file_stem().unwrap().to_str().unwrap(),
            l.name,
            "file name and recorded name differ"
        );
    }
}

#[test]
fn fixtures_record_provenance() {
    for rel in ["108/he3_z4.cay", "1176/z7sq_sl23.grp"] {
        let file = GroupFile::load(&corpus_dir().join(rel)).unwrap();
        assert!(
            file.provenance.contains("candidate for Id("),
            "{rel}: {}",
            file.provenance
        );
    }
}

#[test]
fn fixture_class_sizes() {
    let he = load(&corpus_dir().join("108/he3_z4.cay"));
    let mut sizes = he.table.sizes();
    sizes.sort();
    assert_eq!(sizes, vec![1, 1, 1, 9, 9, 9, 9, 9, 9, 9, 9, 9, 12, 12]);

    let z7 = load(&corpus_dir().join("1176/z7sq_sl23.grp"));
    let sizes = z7.table.sizes();
    assert_eq!(sizes.iter().sum::<usize>(), 1176);
    assert_eq!(sizes.iter().filter(|&&s| s == 24).count(), 2);
}

#[test]
fn cayley_export_round_trip_keeps_fingerprint() {
    for rel in [
        "21/frobenius_7_3.grp",
        "24/sl2_3.grp",
        "27/heis27.grp",
        "36/z3sq_z4.grp",
    ] {
        let l = load(&corpus_dir().join(rel));
        let g = l.table.group();
        let back = cayley_to_group(&group_to_cayley(g)).unwrap();
        assert_eq!(back.fingerprint(), g.fingerprint(), "{rel}");
    }
}

fn sweep_json(path: &std::path::Path) -> String {
    let l = load(path);
    let lab = Lab::new(&l.table, l.name.clone());
    let reports = lab.sweep(&HypothesisKind::ALL.into_iter().collect::<BTreeSet<_>>());
    build_report(&l.name, &l.table, &reports).to_json()
}

#[test]
fn reports_are_identical_across_runs_and_pool_sizes() {
    let paths: Vec<_> = [
        "78/frobenius_13_6.grp",
        "108/he3_z4.cay",
        "168/agammal18.grp",
    ]
    .iter()
    .map(|r| corpus_dir().join(r))
    .collect();
    let reference: Vec<String> = paths.iter().map(|p| sweep_json(p)).collect();
    for threads in [1, 3] {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap();
        let again: Vec<String> = pool.install(|| paths.iter().map(|p| sweep_json(p)).collect());
        assert_eq!(again, reference, "{threads} thread(s)");
    }
    for json in &reference {
        let parsed = parse_report(json).unwrap();
        assert_eq!(&parsed.to_json(), json);
    }
}

#[test]
fn scan_matches_recheck_from_scratch() {
    for l in common::corpus_up_to(200) {
        let t = &l.table;
        let fresh = ClassTable::new(Arc::clone(t.group_arc()));
        let lab = Lab::new(t, l.name.clone());
        let check = Lab::new(&fresh, l.name.clone());
        for m in lab.scan_hypotheses(&HypothesisKind::ALL.into_iter().collect()) {
            if m.kind == HypothesisKind::CosetConjugate {
                continue;
            }
            assert!(check.holds(m.kind, &m.class_ids), "{}: {m:?}", l.name);
        }
    }
}
