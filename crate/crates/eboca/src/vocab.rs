//! The term catalog: every vocabulary IRI the emitters are allowed to use.
//!
//! Most entries are reused from published biomedical and provenance
//! vocabularies (NCIt, SIO, OBO, ChEMBL, CTD, SNOMED CT, ECO, PAV, DCMI,
//! FOAF, SPAR); the `eboca-sd`/`eboca-ev` entries are the schema's own terms.

use std::sync::LazyLock;

use indexmap::IndexMap;

use crate::rdf::Iri;

/// Base IRI under which instance identifiers are minted.
pub const RESOURCE_BASE: &str = "https://w3id.org/eboca/resource/";

/// The active resource base: `EBOCA_BASE_IRI` when set (read once), the
/// default otherwise.
pub fn resource_base() -> &'static str {
    static BASE: LazyLock<String> = LazyLock::new(|| match std::env::var("EBOCA_BASE_IRI") {
        Ok(value) if !value.is_empty() => {
            if value.ends_with('/') {
                value
            } else {
                format!("{value}/")
            }
        }
        _ => RESOURCE_BASE.to_string(),
    });
    &BASE
}
/// Namespace of the created association/concept terms.
pub const SEM_DISNET_NS: &str = "https://w3id.org/eboca/sem-disnet#";
/// Namespace of the created evidence terms.
pub const EVIDENCES_NS: &str = "https://w3id.org/eboca/evidences#";

/// One catalog entry: a display prefix, a local name, and the full IRI.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VocabTerm {
    pub prefix: &'static str,
    pub local: &'static str,
    pub iri: Iri,
}

macro_rules! vocab {
    ($( $(#[$doc:meta])* $name:ident => ($prefix:literal, $local:literal, $iri:literal); )+) => {
        $(
            $(#[$doc])*
            pub static $name: LazyLock<Iri> =
                LazyLock::new(|| Iri::new($iri).expect("catalog IRI is well-formed"));
        )+

        /// The full catalog, in declaration order.
        pub static CATALOG: LazyLock<Vec<VocabTerm>> = LazyLock::new(|| {
            vec![
                $(VocabTerm {
                    prefix: $prefix,
                    local: $local,
                    iri: Iri::new($iri).expect("catalog IRI is well-formed"),
                },)+
            ]
        });
    };
}

vocab! {
    // W3C core
    RDF_TYPE => ("rdf", "type", "http://www.w3.org/1999/02/22-rdf-syntax-ns#type");
    RDF_LANG_STRING => ("rdf", "langString", "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString");
    RDFS_LABEL => ("rdfs", "label", "http://www.w3.org/2000/01/rdf-schema#label");
    RDFS_COMMENT => ("rdfs", "comment", "http://www.w3.org/2000/01/rdf-schema#comment");
    RDFS_SUBCLASS_OF => ("rdfs", "subClassOf", "http://www.w3.org/2000/01/rdf-schema#subClassOf");
    RDFS_SUBPROPERTY_OF => ("rdfs", "subPropertyOf", "http://www.w3.org/2000/01/rdf-schema#subPropertyOf");
    RDFS_DOMAIN => ("rdfs", "domain", "http://www.w3.org/2000/01/rdf-schema#domain");
    RDFS_RANGE => ("rdfs", "range", "http://www.w3.org/2000/01/rdf-schema#range");
    RDFS_SEE_ALSO => ("rdfs", "seeAlso", "http://www.w3.org/2000/01/rdf-schema#seeAlso");
    OWL_CLASS => ("owl", "Class", "http://www.w3.org/2002/07/owl#Class");
    OWL_OBJECT_PROPERTY => ("owl", "ObjectProperty", "http://www.w3.org/2002/07/owl#ObjectProperty");
    OWL_DATATYPE_PROPERTY => ("owl", "DatatypeProperty", "http://www.w3.org/2002/07/owl#DatatypeProperty");
    OWL_INVERSE_OF => ("owl", "inverseOf", "http://www.w3.org/2002/07/owl#inverseOf");
    XSD_STRING => ("xsd", "string", "http://www.w3.org/2001/XMLSchema#string");
    XSD_DOUBLE => ("xsd", "double", "http://www.w3.org/2001/XMLSchema#double");
    XSD_DATE => ("xsd", "date", "http://www.w3.org/2001/XMLSchema#date");

    // SIO
    /// The association superclass joining both schema modules.
    SIO_ASSOCIATION => ("sio", "SIO_000897", "http://semanticscience.org/resource/SIO_000897");
    SIO_SEMANTIC_TYPE => ("sio", "SIO_000326", "http://semanticscience.org/resource/SIO_000326");
    SIO_DISEASE_GENE_ASSOCIATION => ("sio", "SIO_000983", "http://semanticscience.org/resource/SIO_000983");
    SIO_DRUG_DRUG_INTERACTION => ("sio", "SIO_001006", "http://semanticscience.org/resource/SIO_001006");
    /// `refers to`: association node to endpoint concept.
    SIO_REFERS_TO => ("sio", "SIO_000628", "http://semanticscience.org/resource/SIO_000628");
    /// `is referred to by`: endpoint concept back to association node.
    SIO_IS_REFERRED_TO_BY => ("sio", "SIO_000212", "http://semanticscience.org/resource/SIO_000212");
    /// `has measurement value`: association to its score node.
    SIO_HAS_MEASUREMENT_VALUE => ("sio", "SIO_000216", "http://semanticscience.org/resource/SIO_000216");
    /// `has value`: score node to its numeric literal.
    SIO_HAS_VALUE => ("sio", "SIO_000300", "http://semanticscience.org/resource/SIO_000300");
    /// `has evidence`: association to a supporting evidence node.
    SIO_HAS_EVIDENCE => ("sio", "SIO_000772", "http://semanticscience.org/resource/SIO_000772");
    SIO_HAS_ATTRIBUTE => ("sio", "SIO_000008", "http://semanticscience.org/resource/SIO_000008");

    // NCIt
    NCIT_DISEASE => ("ncit", "C7057", "http://ncicb.nci.nih.gov/xml/owl/EVS/Thesaurus.owl#C7057");
    NCIT_GENE => ("ncit", "C16612", "http://ncicb.nci.nih.gov/xml/owl/EVS/Thesaurus.owl#C16612");
    NCIT_PROTEIN => ("ncit", "C17021", "http://ncicb.nci.nih.gov/xml/owl/EVS/Thesaurus.owl#C17021");
    NCIT_ORGANISM => ("ncit", "C14250", "http://ncicb.nci.nih.gov/xml/owl/EVS/Thesaurus.owl#C14250");
    NCIT_SCORE => ("ncit", "C25338", "http://ncicb.nci.nih.gov/xml/owl/EVS/Thesaurus.owl#C25338");
    NCIT_DISEASE_MARKER => ("ncit", "C18329", "http://ncicb.nci.nih.gov/xml/owl/EVS/Thesaurus.owl#C18329");
    NCIT_NCRNA => ("ncit", "C26549", "http://ncicb.nci.nih.gov/xml/owl/EVS/Thesaurus.owl#C26549");
    NCIT_PPI => ("ncit", "C18469", "http://ncicb.nci.nih.gov/xml/owl/EVS/Thesaurus.owl#C18469");

    // OBO Foundry
    OBO_PHENOTYPIC_ABNORMALITY => ("obo", "HP_0000118", "http://purl.obolibrary.org/obo/HP_0000118");
    OBO_VARIANT => ("obo", "SO_0001060", "http://purl.obolibrary.org/obo/SO_0001060");
    OBO_PROTEIN_CLASS => ("obo", "PR_000000001", "http://purl.obolibrary.org/obo/PR_000000001");
    /// Evidence gathered by automated inference.
    ECO_COMPUTATIONAL_INFERENCE => ("eco", "ECO_0007672", "http://purl.obolibrary.org/obo/ECO_0007672");
    /// Evidence recorded from a curated statement.
    ECO_DOCUMENTED_STATEMENT => ("eco", "ECO_0006151", "http://purl.obolibrary.org/obo/ECO_0006151");

    // Orphanet
    ORDO_CLASSIFICATION_ASSOCIATION => ("ordo", "Orphanet_557492", "http://www.orpha.net/ORDO/Orphanet_557492");

    // WikiPathways
    WP_PATHWAY => ("wp", "Pathway", "http://vocabularies.wikipathways.org/wp#Pathway");

    // ChEMBL core ontology
    CCO_DRUG => ("cco", "Drug", "http://rdf.ebi.ac.uk/terms/chembl#Drug");
    CCO_TARGET => ("cco", "Target", "http://rdf.ebi.ac.uk/terms/chembl#Target");
    CCO_MECHANISM => ("cco", "Mechanism", "http://rdf.ebi.ac.uk/terms/chembl#Mechanism");
    CCO_DRUG_INDICATION => ("cco", "DrugIndication", "http://rdf.ebi.ac.uk/terms/chembl#DrugIndication");
    CCO_HAS_MECHANISM => ("cco", "hasMechanism", "http://rdf.ebi.ac.uk/terms/chembl#hasMechanism");

    // CTD
    CTD_CHEMICAL_DISEASE_ASSOCIATION => ("ctd", "Chemical-Disease-Association", "http://ctdbase.org/voc/Chemical-Disease-Association");

    // SNOMED CT
    SCT_SIDE_EFFECT => ("sct", "662014003", "http://snomed.info/id/662014003");

    // PAV provenance
    PAV_DERIVED_FROM => ("pav", "derivedFrom", "http://purl.org/pav/derivedFrom");
    PAV_CREATED_ON => ("pav", "createdOn", "http://purl.org/pav/createdOn");
    PAV_LAST_UPDATED_ON => ("pav", "lastUpdatedOn", "http://purl.org/pav/lastUpdatedOn");
    PAV_VERSION => ("pav", "version", "http://purl.org/pav/version");
    PAV_CREATED_BY => ("pav", "createdBy", "http://purl.org/pav/createdBy");
    PAV_CREATED_WITH => ("pav", "createdWith", "http://purl.org/pav/createdWith");

    // DCMI terms
    DCT_TITLE => ("dct", "title", "http://purl.org/dc/terms/title");
    DCT_ABSTRACT => ("dct", "abstract", "http://purl.org/dc/terms/abstract");
    DCT_IS_PART_OF => ("dct", "isPartOf", "http://purl.org/dc/terms/isPartOf");

    // SPAR: document components and bibliographic expressions
    DOCO_PARAGRAPH => ("doco", "Paragraph", "http://purl.org/spar/doco/Paragraph");
    FABIO_EXPRESSION => ("fabio", "Expression", "http://purl.org/spar/fabio/Expression");

    // FOAF
    FOAF_AGENT => ("foaf", "Agent", "http://xmlns.com/foaf/0.1/Agent");
    FOAF_PAGE => ("foaf", "page", "http://xmlns.com/foaf/0.1/page");

    // Created SEM-DISNET terms
    SD_PHENOTYPE => ("eboca-sd", "Phenotype", "https://w3id.org/eboca/sem-disnet#Phenotype");
    SD_DISEASE_PHENOTYPE_ASSOCIATION => ("eboca-sd", "DiseasePhenotypeAssociation", "https://w3id.org/eboca/sem-disnet#DiseasePhenotypeAssociation");
    SD_DRUG_DISEASE_MARKER => ("eboca-sd", "DrugDiseaseMarker", "https://w3id.org/eboca/sem-disnet#DrugDiseaseMarker");
    SD_DRUG_DISEASE_THERAPEUTIC => ("eboca-sd", "DrugDiseaseTherapeutic", "https://w3id.org/eboca/sem-disnet#DrugDiseaseTherapeutic");
    SD_DRUG_DISEASE_INFERRED => ("eboca-sd", "DrugDiseaseInferred", "https://w3id.org/eboca/sem-disnet#DrugDiseaseInferred");
    SD_DRUG_TARGET_ASSOCIATION => ("eboca-sd", "DrugTargetAssociation", "https://w3id.org/eboca/sem-disnet#DrugTargetAssociation");
    SD_DISEASE_VARIANT_ASSOCIATION => ("eboca-sd", "DiseaseVariantAssociation", "https://w3id.org/eboca/sem-disnet#DiseaseVariantAssociation");
    SD_GENE_VARIANT_ASSOCIATION => ("eboca-sd", "GeneVariantAssociation", "https://w3id.org/eboca/sem-disnet#GeneVariantAssociation");
    SD_GENE_PATHWAY_ASSOCIATION => ("eboca-sd", "GenePathwayAssociation", "https://w3id.org/eboca/sem-disnet#GenePathwayAssociation");
    SD_DISEASE_NCRNA_ASSOCIATION => ("eboca-sd", "DiseaseNcRNAAssociation", "https://w3id.org/eboca/sem-disnet#DiseaseNcRNAAssociation");
    /// Links a drug to the mechanism association it participates in.
    SD_DRUG_FOR_MECHANISM => ("eboca-sd", "drugForMechanism", "https://w3id.org/eboca/sem-disnet#drugForMechanism");

    // Created Evidences terms
    EV_EVIDENCE => ("eboca-ev", "Evidence", "https://w3id.org/eboca/evidences#Evidence");
    EV_CONFIDENCE_SCORE => ("eboca-ev", "confidenceScore", "https://w3id.org/eboca/evidences#confidenceScore");
    EV_TEXT => ("eboca-ev", "text", "https://w3id.org/eboca/evidences#text");
    EV_SECTION => ("eboca-ev", "section", "https://w3id.org/eboca/evidences#section");
}

/// Looks a term up by full IRI.
pub fn find(iri: &Iri) -> Option<&'static VocabTerm> {
    CATALOG.iter().find(|t| &t.iri == iri)
}

/// True when the IRI is either a catalog term or minted under the resource
/// base; emitters must never produce anything else.
pub fn is_known(iri: &Iri) -> bool {
    iri.as_str().starts_with(resource_base()) || find(iri).is_some()
}

/// Prefix declarations for Turtle export and the query parser.
pub fn default_prefixes() -> IndexMap<String, Iri> {
    let mut map = IndexMap::new();
    let mut add = |prefix: &str, ns: &str| {
        map.insert(prefix.to_string(), Iri::new(ns).expect("namespace IRI"));
    };
    add("rdf", "http://www.w3.org/1999/02/22-rdf-syntax-ns#");
    add("rdfs", "http://www.w3.org/2000/01/rdf-schema#");
    add("owl", "http://www.w3.org/2002/07/owl#");
    add("xsd", "http://www.w3.org/2001/XMLSchema#");
    add("sio", "http://semanticscience.org/resource/");
    add(
        "ncit",
        "http://ncicb.nci.nih.gov/xml/owl/EVS/Thesaurus.owl#",
    );
    add("obo", "http://purl.obolibrary.org/obo/");
    add("ordo", "http://www.orpha.net/ORDO/");
    add("wp", "http://vocabularies.wikipathways.org/wp#");
    add("cco", "http://rdf.ebi.ac.uk/terms/chembl#");
    add("ctd", "http://ctdbase.org/voc/");
    add("sct", "http://snomed.info/id/");
    add("pav", "http://purl.org/pav/");
    add("dct", "http://purl.org/dc/terms/");
    add("doco", "http://purl.org/spar/doco/");
    add("fabio", "http://purl.org/spar/fabio/");
    add("foaf", "http://xmlns.com/foaf/0.1/");
    add("eboca-sd", SEM_DISNET_NS);
    add("eboca-ev", EVIDENCES_NS);
    map
}

/// Two-column text table of the catalog: `prefix:local<TAB>IRI`.
pub fn catalog_table() -> String {
    let mut out = String::new();
    for term in CATALOG.iter() {
        out.push_str(&format!(
            "{}:{}\t{}\n",
            term.prefix,
            term.local,
            term.iri.as_str()
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn catalog_iris_are_unique() {
        let mut seen = HashSet::new();
        for term in CATALOG.iter() {
            assert!(
                seen.insert(term.iri.as_str().to_string()),
                "duplicate IRI {}",
                term.iri.as_str()
            );
        }
    }

    #[test]
    fn named_statics_resolve() {
        assert_eq!(
            SIO_ASSOCIATION.as_str(),
            "http://semanticscience.org/resource/SIO_000897"
        );
        assert_eq!(
            NCIT_DISEASE.as_str(),
            "http://ncicb.nci.nih.gov/xml/owl/EVS/Thesaurus.owl#C7057"
        );
        assert_eq!(SCT_SIDE_EFFECT.as_str(), "http://snomed.info/id/662014003");
    }

    #[test]
    fn catalog_covers_the_published_term_set() {
        // every term the schema documentation names must stay present
        let required = [
            ("sio", "SIO_000897"),
            ("ncit", "C7057"),
            ("sio", "SIO_000326"),
            ("obo", "HP_0000118"),
            ("ncit", "C18329"),
            ("ncit", "C26549"),
            ("ordo", "Orphanet_557492"),
            ("sio", "SIO_000983"),
            ("ncit", "C25338"),
            ("ncit", "C16612"),
            ("wp", "Pathway"),
            ("obo", "SO_0001060"),
            ("ncit", "C17021"),
            ("obo", "PR_000000001"),
            ("ncit", "C18469"),
            ("ncit", "C14250"),
            ("cco", "Target"),
            ("cco", "Drug"),
            ("cco", "Mechanism"),
            ("cco", "DrugIndication"),
            ("ctd", "Chemical-Disease-Association"),
            ("sct", "662014003"),
            ("sio", "SIO_001006"),
            ("sio", "SIO_000628"),
            ("sio", "SIO_000212"),
            ("cco", "hasMechanism"),
            ("eboca-sd", "drugForMechanism"),
            ("eboca-sd", "Phenotype"),
            ("eboca-sd", "DiseasePhenotypeAssociation"),
            ("eboca-sd", "DrugDiseaseMarker"),
            ("eboca-sd", "DrugDiseaseTherapeutic"),
            ("eboca-sd", "DrugDiseaseInferred"),
            ("eco", "ECO_0007672"),
            ("eco", "ECO_0006151"),
            ("eboca-ev", "Evidence"),
            ("pav", "derivedFrom"),
            ("doco", "Paragraph"),
            ("fabio", "Expression"),
            ("pav", "createdOn"),
            ("pav", "lastUpdatedOn"),
            ("pav", "version"),
            ("pav", "createdBy"),
            ("pav", "createdWith"),
        ];
        for (prefix, local) in required {
            assert!(
                CATALOG
                    .iter()
                    .any(|t| t.prefix == prefix && t.local == local),
                "catalog is missing {prefix}:{local}"
            );
        }
    }

    #[test]
    fn catalog_table_has_one_line_per_term() {
        let table = catalog_table();
        assert_eq!(table.lines().count(), CATALOG.len());
        assert!(table.contains("sio:SIO_000897\thttp://semanticscience.org/resource/SIO_000897"));
    }

    #[test]
    fn every_catalog_term_sits_under_a_declared_prefix() {
        let prefixes = default_prefixes();
        for term in CATALOG.iter() {
            let covered = prefixes
                .values()
                .any(|ns| term.iri.as_str().starts_with(ns.as_str()));
            assert!(covered, "{} has no declared namespace", term.iri.as_str());
        }
    }
}
