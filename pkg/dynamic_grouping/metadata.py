"""This file contains metadata describing the results of the simulations:
the metrics of an episode and the columns of the per-step trajectories.
"""

metadata = {}

"""The metrics of one episode, in the order they are reported."""
metadata["results"] = {
    "temp_rise": {
        "description": "temperature rise at the end of the episode",
        "title": "Temp. Rise",
        "dimensionality": "scalar",
        "type": "float",
        "units": "degC",
        "format": ".4f",
    },
    "gross_output": {
        "description": "output summed over regions and steps",
        "title": "Gross Output",
        "dimensionality": "scalar",
        "type": "float",
        "units": "output",
        "format": ".2f",
    },
    "climate_index": {
        "description": "the climate index",
        "title": "Climate Index",
        "dimensionality": "scalar",
        "type": "float",
        "units": "",
        "format": ".4f",
    },
    "econ_index": {
        "description": "the economic index",
        "title": "Econ. Index",
        "dimensionality": "scalar",
        "type": "float",
        "units": "",
        "format": ".4f",
    },
    "hv_contribution": {
        "description": "area dominated by (climate index, econ index)",
        "title": "Hypervolume Contribution",
        "dimensionality": "scalar",
        "type": "float",
        "units": "",
        "format": ".4f",
    },
    "mean_mitigation": {
        "description": "realised mitigation rate averaged over regions and steps",
        "title": "Mean Mitigation",
        "dimensionality": "scalar",
        "type": "float",
        "units": "",
        "format": ".4f",
    },
}

"""The global quantities recorded after every step."""
metadata["trajectory"] = {
    "step": {"description": "step number", "units": "", "format": "d"},
    "year": {"description": "years since the start", "units": "years", "format": ".1f"},
    "temperature": {
        "description": "temperature above pre-industrial",
        "units": "degC",
        "format": ".6f",
    },
    "carbon_stock": {
        "description": "carbon above the pre-industrial reference",
        "units": "GtC",
        "format": ".6f",
    },
    "gross_output": {
        "description": "total output before damages and abatement",
        "units": "output",
        "format": ".6f",
    },
    "net_output": {
        "description": "total output after damages and abatement",
        "units": "output",
        "format": ".6f",
    },
    "emissions": {"description": "total emissions", "units": "GtC", "format": ".6f"},
    "mean_mitigation": {
        "description": "mean realised mitigation rate",
        "units": "",
        "format": ".6f",
    },
    "mean_savings": {
        "description": "mean realised savings rate",
        "units": "",
        "format": ".6f",
    },
    "consumption": {
        "description": "total consumption, (1 - s) Q, logged for inspection",
        "units": "output",
        "format": ".6f",
    },
}
