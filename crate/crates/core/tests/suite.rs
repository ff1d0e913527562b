use simsun_core::enumeration::{self, Class, ClassSpec};
use simsun_core::verify;

#[test]
fn every_claim_passes_at_seven() {
    let reports = verify::verify_suite("all", 7, 2).unwrap();
    for r in &reports {
        assert!(r.pass || r.exploratory, "{} failed: {:?} vs {:?}", r.claim, r.expected, r.observed);
    }
    assert!(verify::all_pass(&reports));
    // Twelve table cells plus one report per registered claim.
    assert_eq!(reports.len(), 12 + verify::claims().len());
}

#[test]
fn claim_ids_are_unique() {
    let mut ids: Vec<&str> = verify::claims().iter().map(|c| c.id).collect();
    ids.sort();
    ids.dedup();
    assert_eq!(ids.len(), verify::claims().len());
}

#[test]
fn pattern_pairs_match_filter() {
    let patterns = ["123", "132", "213", "231", "312", "321"];
    for n in 0..=7 {
        for class in [Class::Simsun, Class::DoubleSimsun] {
            for (i, a) in patterns.iter().enumerate() {
                for b in &patterns[i + 1..] {
                    let spec = ClassSpec::new(n, class).avoiding(&[a, b]).unwrap();
                    assert_eq!(
                        enumeration::enumerate_class(&spec),
                        enumeration::naive_class(&spec),
                        "{spec}"
                    );
                }
            }
        }
    }
}

#[test]
fn reports_serialize() {
    let reports = verify::verify_suite("rs-total", 6, 1).unwrap();
    let json: serde_json::Value = serde_json::from_str(&verify::reports_to_json(&reports)).unwrap();
    assert_eq!(json[0]["observed"], serde_json::json!([1, 2, 5, 16, 61, 272]));
    let tsv = verify::reports_to_tsv(&reports);
    assert_eq!(tsv.lines().count(), 1 + 6);
}
