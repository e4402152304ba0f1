use floer_core::verify::verify_catalog;
use floer_core::Catalog;

const BUNDLED: &str = include_str!("../../../data/catalog.json");

#[test]
fn bundled_catalog_verifies() {
    let catalog = Catalog::load_str(BUNDLED).unwrap();
    let report = verify_catalog(&catalog);
    assert!(report.all_passed(), "{report}");
}
