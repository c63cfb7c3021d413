COMMAND_START: str = "Running the '%s' command with inputs: %s"
COMMAND_END: str = "Command '%s' finished with verdict '%s'."
COMMAND_FAILED: str = "Command '%s' failed: %s"
ORLIK_TABLE: str = "Orlik table for Sigma%s: kappa=%s kappa'=%s"
ORLIK_RANK_ANOMALY: str = (
    "Sigma%s: literal r=%d exceeds max kappa'=%d; d_j for j>%d is an empty product."
)
COVER_CACHE_MISS: str = "Computing Sigma_%d(%s) from Brieskorn weights %s."
CATALOG_MATCH: str = "Catalog: %s -> %s matched rule '%s' for %s."
CATALOG_NO_MATCH: str = "Catalog: no %s rule relates %s and %s."
PROPAGATE_ROUND: str = "Bound propagation round %d changed %d entries."
PROPAGATE_NEW_INDEX: str = "Bound propagation created d_%d from d_%d <= %d."
EDGE_UNCERTIFIED: str = "Side %d of the %s witness (k=%d) is not certified geodesic."
SCAN_START: str = "Four-point scan over %d vertices with %d worker(s)."
ATLAS_LOADED: str = "Loaded %d atlas entries from %s."
CONFIG_LOADED: str = "Configuration loaded: %s"
