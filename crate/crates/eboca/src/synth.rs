//! Synthetic source generator for scale testing.
//!
//! Expands the fixture table shapes (diseases, genes, drugs, pathways,
//! disease-gene, gene-pathway) to arbitrary row counts, together with a
//! mapping document, and predicts the exact triple count the mapping engine
//! must produce. All identifiers are distinct, so no two rules ever emit the
//! same triple and the closed form is exact.

use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

/// Row counts per table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SynthConfig {
    pub diseases: usize,
    pub genes: usize,
    pub drugs: usize,
    pub pathways: usize,
    pub disease_gene: usize,
    pub gene_pathway: usize,
}

impl SynthConfig {
    /// Smallest configuration of the standard shape whose closed-form
    /// expectation reaches `target` triples.
    pub fn for_target_triples(target: usize) -> SynthConfig {
        // per scale unit: 5 diseases, 5 genes, 3 drugs, 2 pathways,
        // 10 disease-gene rows, 5 gene-pathway rows = 105 triples
        let unit_triples = 105;
        let n = target.div_ceil(unit_triples).max(1);
        SynthConfig {
            diseases: 5 * n,
            genes: 5 * n,
            drugs: 3 * n,
            pathways: 2 * n,
            disease_gene: 10 * n,
            gene_pathway: 5 * n,
        }
    }

    /// Exact number of triples materializing the generated sources yields:
    /// two triples per concept row (type + label), six per disease-gene row
    /// (type, two endpoint joins, score link, score type, score value), and
    /// three per gene-pathway row (type + two joins).
    pub fn expected_triples(&self) -> usize {
        2 * (self.diseases + self.genes + self.drugs + self.pathways)
            + 6 * self.disease_gene
            + 3 * self.gene_pathway
    }
}

/// Paths and expectations for one generated data set.
#[derive(Debug)]
pub struct SynthPlan {
    /// Mapping document path, relative to the generation directory.
    pub mapping_path: std::path::PathBuf,
    pub expected_triples: usize,
}

const MAPPING: &str = "\
PREFIX rdfs <http://www.w3.org/2000/01/rdf-schema#>
PREFIX xsd <http://www.w3.org/2001/XMLSchema#>
PREFIX sio <http://semanticscience.org/resource/>
PREFIX ncit <http://ncicb.nci.nih.gov/xml/owl/EVS/Thesaurus.owl#>
PREFIX wp <http://vocabularies.wikipathways.org/wp#>
PREFIX cco <http://rdf.ebi.ac.uk/terms/chembl#>
PREFIX eboca-sd <https://w3id.org/eboca/sem-disnet#>

RULE diseases
SOURCE csv tables/diseases.csv
SUBJECT <https://w3id.org/eboca/resource/disease/{disease_id}> ncit:C7057
PO rdfs:label ref(name)

RULE genes
SOURCE csv tables/genes.csv
SUBJECT <https://w3id.org/eboca/resource/gene/{gene_id}> ncit:C16612
PO rdfs:label ref(symbol)

RULE drugs
SOURCE csv tables/drugs.csv
SUBJECT <https://w3id.org/eboca/resource/drug/{drug_id}> cco:Drug
PO rdfs:label ref(name)

RULE pathways
SOURCE csv tables/pathways.csv
SUBJECT <https://w3id.org/eboca/resource/pathway/{pathway_id}> wp:Pathway
PO rdfs:label ref(title)

RULE disease_gene
SOURCE csv tables/disease_gene.csv
SUBJECT <https://w3id.org/eboca/resource/disease-gene/{id}> sio:SIO_000983
PO sio:SIO_000216 tmpl(<https://w3id.org/eboca/resource/score/disease-gene:{id}>)
JOIN sio:SIO_000628 diseases ON disease_id = disease_id
JOIN sio:SIO_000628 genes ON gene_id = gene_id

RULE disease_gene_score
SOURCE csv tables/disease_gene.csv
SUBJECT <https://w3id.org/eboca/resource/score/disease-gene:{id}> ncit:C25338
PO sio:SIO_000300 ref(score, xsd:double)

RULE gene_pathway
SOURCE csv tables/gene_pathway.csv
SUBJECT <https://w3id.org/eboca/resource/gene-pathway/{id}> eboca-sd:GenePathwayAssociation
JOIN sio:SIO_000628 genes ON gene_id = gene_id
JOIN sio:SIO_000628 pathways ON pathway_id = pathway_id
";

/// Writes the tables and mapping document under `dir`.
pub fn generate(dir: &Path, config: &SynthConfig) -> std::io::Result<SynthPlan> {
    let tables = dir.join("tables");
    fs::create_dir_all(&tables)?;

    write_table(
        &tables.join("diseases.csv"),
        "disease_id,name",
        config.diseases,
        |i| format!("SD{i:07},synthetic disease {i}"),
    )?;
    write_table(
        &tables.join("genes.csv"),
        "gene_id,symbol",
        config.genes,
        |i| format!("SG{i:07},SYNG{i}"),
    )?;
    write_table(
        &tables.join("drugs.csv"),
        "drug_id,name",
        config.drugs,
        |i| format!("SR{i:07},synthetic drug {i}"),
    )?;
    write_table(
        &tables.join("pathways.csv"),
        "pathway_id,title",
        config.pathways,
        |i| format!("SP{i:07},synthetic pathway {i}"),
    )?;

    let diseases = config.diseases;
    let genes = config.genes;
    write_table(
        &tables.join("disease_gene.csv"),
        "id,disease_id,gene_id,score",
        config.disease_gene,
        |i| {
            format!(
                "DG{i:07},SD{:07},SG{:07},0.{:02}",
                i % diseases,
                i % genes,
                (i % 99) + 1
            )
        },
    )?;
    let pathways = config.pathways;
    write_table(
        &tables.join("gene_pathway.csv"),
        "id,gene_id,pathway_id",
        config.gene_pathway,
        |i| format!("GP{i:07},SG{:07},SP{:07}", i % genes, i % pathways),
    )?;

    let mapping_path = dir.join("synthetic.map");
    fs::write(&mapping_path, MAPPING)?;
    Ok(SynthPlan {
        mapping_path,
        expected_triples: config.expected_triples(),
    })
}

fn write_table(
    path: &Path,
    header: &str,
    rows: usize,
    mut row: impl FnMut(usize) -> String,
) -> std::io::Result<()> {
    let file = fs::File::create(path)?;
    let mut out = BufWriter::new(file);
    writeln!(out, "{header}")?;
    for i in 0..rows {
        writeln!(out, "{}", row(i))?;
    }
    out.flush()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mapping::{materialize, parse_mapping_doc};

    #[test]
    fn small_generation_matches_the_closed_form_exactly() {
        let dir = tempfile::tempdir().unwrap();
        let config = SynthConfig {
            diseases: 7,
            genes: 6,
            drugs: 4,
            pathways: 3,
            disease_gene: 11,
            gene_pathway: 5,
        };
        let plan = generate(dir.path(), &config).unwrap();
        assert_eq!(plan.expected_triples, 2 * 20 + 6 * 11 + 3 * 5);

        let text = std::fs::read_to_string(&plan.mapping_path).unwrap();
        let doc = parse_mapping_doc(&text).unwrap();
        let graph = materialize(&doc, dir.path()).unwrap();
        assert_eq!(graph.len(), plan.expected_triples);
    }

    #[test]
    fn target_sizing_reaches_the_requested_count() {
        let config = SynthConfig::for_target_triples(1_000_000);
        assert!(config.expected_triples() >= 1_000_000);
        // and does not overshoot by more than one unit
        assert!(config.expected_triples() < 1_000_000 + 105);
    }
}
