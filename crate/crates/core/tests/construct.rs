use kn_embed::bounds::genus_bounds;
use kn_embed::certificate::{check, Certificate};
use kn_embed::distribution::types_for_excess;
use kn_embed::exec::Exec;
use kn_embed::fixtures::FixtureStore;
use kn_embed::recipes::construct::construct;
use kn_embed::Error;

fn store() -> FixtureStore {
    FixtureStore::open(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures")).unwrap()
}

#[test]
fn every_type_up_to_17() {
    let store = store();
    for n in 3..=17usize {
        let b = genus_bounds(n as u64).unwrap();
        for t in types_for_excess(b.t as usize) {
            match construct(n, &t, &store, Exec::Parallel) {
                Ok(built) => {
                    assert_eq!(built.output.embedding_type(), t, "K{n}");
                    assert_eq!(built.output.surface.genus, b.orientable, "K{n}");
                    let text = Certificate::new(n, &t, &built).to_text();
                    check(&text).unwrap_or_else(|e| panic!("K{n} {t:?}: {e}"));
                }
                Err(Error::Refusal(_)) if n == 5 || n == 8 => {}
                Err(e) => panic!("K{n} {t:?}: {e}"),
            }
        }
    }
}

#[test]
fn refusals_and_missing() {
    let store = store();
    assert!(matches!(construct(8, &[5], &store, Exec::Parallel), Err(Error::Refusal(_))));
    assert!(matches!(construct(5, &[6, 5], &store, Exec::Parallel), Err(Error::Refusal(_))));
    assert!(matches!(construct(22, &[6], &store, Exec::Parallel), Err(Error::FixtureMissing(_))));
    assert!(matches!(construct(10, &[5], &store, Exec::Parallel), Err(Error::Domain(_))));
    assert!(matches!(construct(10, &[6], &FixtureStore::empty(), Exec::Parallel), Err(Error::FixtureMissing(_))));
}

#[test]
fn fixture_checksums() {
    assert!(store().audit().is_empty());
    assert_eq!(store().entries().len(), 6);
}

#[test]
fn large_fixtures() {
    let store = store();
    for (n, ts) in [(20usize, vec![vec![5], vec![4, 4]]), (23, vec![vec![5], vec![4, 4]]), (30, vec![vec![6], vec![5, 4], vec![4, 4, 4]])] {
        for t in ts {
            let built = construct(n, &t, &store, Exec::Parallel).unwrap_or_else(|e| panic!("K{n} {t:?}: {e}"));
            check(&Certificate::new(n, &t, &built).to_text()).unwrap();
        }
    }
}
