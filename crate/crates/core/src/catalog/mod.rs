//! The identities under test: integrand descriptors paired with closed forms.

mod closed_form;
mod entries;
mod params;

pub use closed_form::{
    cf_2f1_family, cf_3_1_3_48, cf_3_1_3_59, cf_3_1_3_60_61, cf_3_1_3_62, cf_3_1_3_62_kderiv, cf_3_1_3_63, cf_3_1_3_70,
    displayed_constant, rhs_main_theorem, ClosedForm, DisplayedConstant,
};
pub use entries::{
    build_catalog, catalog_from_json, catalog_to_json, default_params, make_entry, CatalogEntry, EntryParams,
    CATALOG_IDS, CATALOG_SCHEMA,
};
pub use params::{random_paper_strict_params, DomainClass, IntegralParams};
