#!/usr/bin/env python3
"""Build the bundled demo corpus and its golden outputs.

Every record is designed for a specific pipeline outcome under default
settings (rule generator, bundled lexicon, tau=3):

  * full        - claim has no auxiliary verb, its first lexicon word also
                  appears in the evidence, so both stages succeed;
  * claim_aux   - claim contains an auxiliary verb, so the generator inserts
                  "not" (a pure insertion: nothing to search for in stage 2);
  * claim_miss  - antonym substitution fires but the replaced word does not
                  occur in the evidence;
  * unchanged   - no rule applies, generation returns the claim as-is;
  * not_sup     - REF/NEI records are never augmented.

The script verifies each record's outcome before writing anything, then
freezes the corpus, the expected `augment` output, and the expected stats
report into src/crossaug/data/.
"""
from __future__ import annotations

import random
import sys
from pathlib import Path

from crossaug.corpus import Dataset, Label, Sample, records_to_text, validate
from crossaug.negator import RuleGenerator
from crossaug.pipeline import OutcomeKind, PipelineConfig, augment_dataset, augment_sample
from crossaug.spandiff import span_diff
from crossaug.tokenizer import tokenize

DATA_DIR = Path(__file__).resolve().parents[1] / "src" / "crossaug" / "data"

# (claim, evidence, word replaced by its antonym) - 60 records
FULL = [
    ("The northern terminal opened to passengers in 1994.",
     "After two years of construction, the northern terminal opened to passengers in 1994.",
     "northern"),
    ("The old lighthouse stands on a basalt cliff.",
     "São Jacinto's keepers note the old lighthouse stands on a basalt cliff.",
     "old"),
    ("The club won its third league title in 1987.",
     "The club won its third league title in 1987 under manager Ana Costa.",
     "won"),
    ("The footpath runs east of the mill stream.",
     "Parish maps from 1921 show the footpath running east of the mill stream.",
     "east"),
    ("The coastal route begins at the harbour gate.",
     "According to the timetable, the coastal route begins at the harbour gate.",
     "begins"),
    ("The museum holds the largest fossil collection in the region.",
     "Curators say the museum holds the largest fossil collection in the region.",
     "largest"),
    ("The composer finished her first symphony in 1902.",
     "Letters confirm the composer finished her first symphony in 1902 in Vienna.",
     "first"),
    ("The reservoir sits behind a high concrete dam.",
     "Engineers inspected the high concrete dam behind the reservoir in spring.",
     "high"),
    ("Grain prices rose sharply during the drought.",
     "Market records show grain prices rose sharply during the drought of 1931.",
     "rose"),
    ("Divers found the wreck in deep water off the cape.",
     "The survey team photographed the wreck in deep water off the cape.",
     "deep"),
    ("Zürich's première tram line opened in 1882.",
     "Transit histories record that Zürich's première tram line opened in 1882.",
     "opened"),
    ("The caravan route turned south at the oasis.",
     "Traders' journals describe how the caravan route turned south at the oasis.",
     "south"),
    ("A long viaduct carries the line over the marsh.",
     "A long viaduct carries the line over the marsh between the two junctions.",
     "long"),
    ("The observatory published its early star catalogue in 1879.",
     "Historians cite the early star catalogue the observatory published in 1879.",
     "early"),
    ("The delta region receives the most rainfall in the country.",
     "Climate tables show the delta region receives the most rainfall in the country.",
     "most"),
    ("The pilgrim trail bends west beyond the stone bridge.",
     "Guidebooks note the pilgrim trail bends west beyond the stone bridge.",
     "west"),
    ("A large mosaic covers the basilica floor.",
     "Restorers cleaned the large mosaic that covers the basilica floor.",
     "large"),
    ("The copper mine closed after the 1967 flood.",
     "Company ledgers confirm the copper mine closed after the 1967 flood.",
     "closed"),
    ("The caravans cross the dunes at night.",
     "Guides explain that the caravans cross the dunes at night to avoid the heat.",
     "night"),
    ("The upper falls freeze solid by December.",
     "Park rangers report that the upper falls freeze solid by December.",
     "upper"),
    ("Timber output fell steadily after 1950.",
     "Industry yearbooks show timber output fell steadily after 1950.",
     "fell"),
    ("The restoration began shortly after the armistice.",
     "Museum notes state the restoration began shortly after the armistice.",
     "began"),
    ("The siege ended with a negotiated truce.",
     "Chronicles agree the siege ended with a negotiated truce that autumn.",
     "ended"),
    ("The port handles major grain shipments each autumn.",
     "Trade reports list the major grain shipments the port handles each autumn.",
     "major"),
    ("The expedition lost two sledges in the crevasse field.",
     "Diaries recount how the expedition lost two sledges in the crevasse field.",
     "lost"),
    ("A wide esplanade separates the castle from the sea.",
     "Postcards from 1910 show the wide esplanade between the castle and the sea.",
     "wide"),
    ("The lodge marks the northernmost stop on the trail.",
     "Hikers register at the lodge, the northernmost stop on the trail.",
     "northernmost"),
    ("The alpine pass stays open through summer only.",
     "Road crews keep the alpine pass open through summer only.",
     "summer"),
    ("The ferry service pauses each winter.",
     "Schedules show the ferry service pauses each winter when ice forms.",
     "winter"),
    ("The market square fills with traders by day.",
     "Travel writers describe how the market square fills with traders by day.",
     "day"),
    ("Olive yields increased after the terraces returned to use.",
     "Agronomists found that olive yields increased once the terraces returned to use.",
     "increased"),
    ("River salinity decreased following the dam removal.",
     "Field data indicate river salinity decreased following the dam removal.",
     "decreased"),
    ("The spire remains the highest point in the old town.",
     "At 123 metres, the spire remains the highest point in the old town.",
     "highest"),
    ("The basin records the lowest winter temperatures nationwide.",
     "Meteorologists confirm the basin records the lowest winter temperatures nationwide.",
     "lowest"),
    ("The eastern gate bears a carved lion.",
     "Visitors photograph the carved lion on the eastern gate.",
     "eastern"),
    ("The western breakwater shelters the fishing fleet.",
     "Harbour plans show the western breakwater sheltering the fishing fleet.",
     "western"),
    ("The southern vineyards ripen two weeks ahead of the rest.",
     "Growers say the southern vineyards ripen two weeks ahead of the rest.",
     "southern"),
    ("A small chapel crowns the ridge.",
     "Pilgrims visit the small chapel that crowns the ridge.",
     "small"),
    ("The jetty shows fully at low tide.",
     "Photographs taken at low tide show the jetty fully.",
     "low"),
    ("The frescoes date from the late baroque period.",
     "Art historians place the frescoes in the late baroque period.",
     "late"),
    ("The ledger preserves the earliest map of the valley.",
     "Archivists digitised the earliest map of the valley from the ledger.",
     "earliest"),
    ("The annex houses the latest acquisitions.",
     "A plaque notes the annex houses the latest acquisitions.",
     "latest"),
    ("The cellar keeps the oldest vintages behind glass.",
     "Sommeliers keep the oldest vintages behind glass in the cellar.",
     "oldest"),
    ("The newest turbine spins on the ridge line.",
     "Engineers commissioned the newest turbine on the ridge line in March.",
     "newest"),
    ("The longest tunnel on the line measures seven kilometres.",
     "Railway surveys list the longest tunnel on the line at seven kilometres.",
     "longest"),
    ("The shortest runway serves light aircraft only.",
     "Airport charts mark the shortest runway for light aircraft only.",
     "shortest"),
    ("The inner courtyard hides a marble fountain.",
     "Guides point out the marble fountain in the inner courtyard.",
     "inner"),
    ("The outer wall withstood three sieges.",
     "Archaeologists believe the outer wall withstood three sieges.",
     "outer"),
    ("The refuge perches above the tree line.",
     "Climbers rest at the refuge perched above the tree line.",
     "above"),
    ("The crypt lies below the chancel.",
     "Excavations confirmed the crypt lies below the chancel.",
     "below"),
    ("The orchard blooms before the equinox.",
     "Growers note the orchard blooms before the equinox in most years.",
     "before"),
    ("The library reopened after the renovation.",
     "Newsletters record the library reopening after the renovation.",
     "after"),
    ("The census counted fewer farms than in 1931.",
     "Statisticians counted fewer farms in the census than in 1931.",
     "fewer"),
    ("The plateau gets the least snowfall in the range.",
     "Weather stations show the plateau gets the least snowfall in the range.",
     "least"),
    ("The regatta victory secured the club's promotion.",
     "Local papers celebrated the regatta victory that secured the promotion.",
     "victory"),
    ("The 1899 defeat closed the garrison's campaign.",
     "Military histories tie the 1899 defeat to the campaign's closure.",
     "defeat"),
    ("The clinic serves a rural district of nine villages.",
     "Health records show the clinic serving a rural district of nine villages.",
     "rural"),
    ("The reserve borders an urban greenbelt.",
     "Planning documents show the reserve bordering an urban greenbelt.",
     "urban"),
    ("The exhibit features foreign coinage from three centuries.",
     "Catalogues describe the foreign coinage featured across three centuries.",
     "foreign"),
    ("The gardens remain public despite the sale.",
     "Deeds ensure the gardens remain public despite the sale.",
     "public"),
]

# claims with an auxiliary verb: "not" insertion, claim-only - 15 records
CLAIM_AUX = [
    ("The film was released in 1999.",
     "Studio records show the film reaching cinemas in 1999."),
    ("The canal is navigable for most of the year.",
     "Barge operators use the canal for most of the year."),
    ("The two towers were joined by a sky bridge in 1973.",
     "City plans confirm a sky bridge joining the towers in 1973."),
    ("The archive has preserved every issue since 1870.",
     "Librarians keep every issue of the paper from 1870 onward."),
    ("The vaccine can prevent the illness in most cases.",
     "Trial data support strong protection in most cases."),
    ("The choir will perform the mass next Easter.",
     "Concert listings announce the mass for next Easter."),
    ("Visitors may climb the tower in summer.",
     "The tower opens to climbers each summer."),
    ("The bridge does carry heavy lorries.",
     "Load tests cleared the bridge for heavy lorries."),
    ("The society had published nine volumes by 1900.",
     "Bibliographies list nine volumes published by 1900."),
    ("The springs are warm throughout the year.",
     "Bathers enjoy warm springs in every season."),
    ("The editors do review every submission.",
     "The journal's policy promises review of every submission."),
    ("The orchard could yield twice as much with irrigation.",
     "Agronomists estimate double yields with irrigation."),
    ("The ferry would sail even in rough weather.",
     "Logs show sailings continued through rough weather."),
    ("The mill has run on river water since 1840.",
     "The wheel still turns on river water as in 1840."),
    ("The statue was carved from a single oak trunk.",
     "Conservators confirmed the single-trunk oak carving."),
]

# antonym substitution fires but the word is absent from the evidence - 10
CLAIM_MISS = [
    ("The trailhead sits north of the quarry.",
     "Hikers find the trailhead just beyond the quarry, toward the pole star.",
     "north"),
    ("The oldest bell rings only on feast days.",
     "The heaviest bell in the tower rings only on feast days.",
     "oldest"),
    ("The skipper won the round-the-bay race twice.",
     "Race archives credit the skipper with two round-the-bay titles.",
     "won"),
    ("The pass closed for the season in October.",
     "Snowfall shut the route for the season in October.",
     "closed"),
    ("A large heronry occupies the island.",
     "Dozens of heron nests crowd the island each spring.",
     "large"),
    ("The mine produced silver from early medieval times.",
     "Chronicles mention medieval silver workings at the mine.",
     "early"),
    ("The cellars run below the entire terrace.",
     "A network of cellars stretches beneath the entire terrace.",
     "below"),
    ("The chalet opens only in summer.",
     "Guests book the chalet for the warm months alone.",
     "summer"),
    ("The chess victory drew national attention.",
     "Newspapers covered the decisive final match nationwide.",
     "victory"),
    ("The island counts fewer than forty residents.",
     "Census takers list the island's population at under forty.",
     "fewer"),
]

# no auxiliary, no lexicon word: generation returns the claim unchanged - 10
UNCHANGED = [
    ("Penicillin kills bacteria quickly.",
     "Laboratory assays demonstrate rapid bactericidal action."),
    ("The violinist toured twelve cities in autumn.",
     "Tour programmes list twelve autumn concerts."),
    ("The café roasts its own beans.",
     "Reviewers praise the café's house-roasted beans."),
    ("Basalt columns line the cove.",
     "Photographers flock to the columned cove."),
    ("The comet returns every 76 years.",
     "Astronomical tables give a 76-year period for the comet."),
    ("Rainwater cisterns supply the hilltop village.",
     "The village relies on hilltop cisterns for water."),
    ("The printing press reached the town in 1531.",
     "Municipal records note a press operating from 1531."),
    ("Cork oaks shade the farmhouse courtyard.",
     "Travellers rest beneath the cork oaks by the farmhouse."),
    ("The glassworks employs ninety artisans.",
     "Payroll ledgers count ninety artisans at the glassworks."),
    ("Terns nest along the shingle spit.",
     "Ornithologists ring tern chicks on the spit each June."),
]

# REF / NEI records are skipped before generation - 5
NOT_SUP = [
    ("The aqueduct was built in a single decade.",
     "Construction actually spanned four decades.", Label.REF),
    ("The summit lies above five thousand metres.",
     "Survey data put the summit at 4,808 metres.", Label.REF),
    ("The opera house opened in 1899.",
     "The gala opening took place in 1905.", Label.REF),
    ("The painter visited the island twice.",
     "Biographies mention journeys to several islands.", Label.NEI),
    ("The festival predates the cathedral.",
     "Neither origin year appears in surviving records.", Label.NEI),
]


def build_entries():
    entries = []
    for claim, evidence, word in FULL:
        entries.append(("full", claim, evidence, Label.SUP, word))
    for claim, evidence in CLAIM_AUX:
        entries.append(("claim_aux", claim, evidence, Label.SUP, None))
    for claim, evidence, word in CLAIM_MISS:
        entries.append(("claim_miss", claim, evidence, Label.SUP, word))
    for claim, evidence in UNCHANGED:
        entries.append(("unchanged", claim, evidence, Label.SUP, None))
    for claim, evidence, label in NOT_SUP:
        entries.append(("not_sup", claim, evidence, label, None))
    assert len(entries) == 100
    random.Random(73).shuffle(entries)
    return entries


def verify_entry(kind, sample, word, config, generator):
    outcome = augment_sample(sample, config, generator=generator)
    claim_diff = None
    result = generator.generate(sample.claim)
    if result.negative_claim != sample.claim:
        claim_diff = span_diff(tokenize(sample.claim), tokenize(result.negative_claim))

    if kind == "full":
        assert outcome.kind is OutcomeKind.FULL, (sample.id, outcome.kind, sample.claim)
        src = tokenize(sample.claim).texts()[claim_diff.src_start : claim_diff.src_stop]
        assert src == [w for w in src if w.lower() == word.lower()], (sample.id, src, word)
    elif kind == "claim_aux":
        assert outcome.kind is OutcomeKind.CLAIM_ONLY, (sample.id, outcome.kind)
        assert claim_diff.src_len == 0, (sample.id, "expected pure insertion")
    elif kind == "claim_miss":
        assert outcome.kind is OutcomeKind.CLAIM_ONLY, (sample.id, outcome.kind)
        src = tokenize(sample.claim).texts()[claim_diff.src_start : claim_diff.src_stop]
        assert [t.lower() for t in src] == [word.lower()], (sample.id, src, word)
    elif kind == "unchanged":
        assert outcome.kind is OutcomeKind.SKIPPED_UNCHANGED, (sample.id, outcome.kind, sample.claim)
    elif kind == "not_sup":
        assert outcome.kind is OutcomeKind.SKIPPED_NOT_SUP, (sample.id, outcome.kind)
    return outcome


def main() -> int:
    entries = build_entries()
    samples = []
    for index, (kind, claim, evidence, label, word) in enumerate(entries, start=1):
        samples.append((kind, Sample(f"d{index:03d}", claim, evidence, label), word))

    config = PipelineConfig()
    generator = RuleGenerator()
    counts = {}
    for kind, sample, word in samples:
        outcome = verify_entry(kind, sample, word, config, generator)
        counts[outcome.kind] = counts.get(outcome.kind, 0) + 1

    expected = {
        OutcomeKind.FULL: 60,
        OutcomeKind.CLAIM_ONLY: 25,
        OutcomeKind.SKIPPED_UNCHANGED: 10,
        OutcomeKind.SKIPPED_NOT_SUP: 5,
    }
    assert counts == expected, counts

    dataset = Dataset.of(sample for _, sample, _ in samples)
    corpus_text = records_to_text(dataset)

    augmented, stats = augment_dataset(dataset, config)
    assert stats.augmented_total == 205, stats
    assert f"{stats.ratio:.2f}" == "2.05"
    report = validate(augmented)
    assert report.ok, report.lines()[:5]

    DATA_DIR.mkdir(parents=True, exist_ok=True)
    (DATA_DIR / "desk_corpus.jsonl").write_text(corpus_text, encoding="utf-8")
    (DATA_DIR / "desk_corpus.golden.jsonl").write_text(
        records_to_text(augmented), encoding="utf-8"
    )
    (DATA_DIR / "desk_corpus.golden.stats").write_text(
        stats.report_text(), encoding="utf-8"
    )
    print(f"wrote {len(dataset)} records, {len(augmented)} augmented lines")
    print(stats.report_text(), end="")
    return 0


if __name__ == "__main__":
    sys.exit(main())
