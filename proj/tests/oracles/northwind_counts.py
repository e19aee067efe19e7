#!/usr/bin/env python3
# Copyright 2026 The traitnorm Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Counting oracle over the pinned Northwind CSVs.

Reads the raw CSV files with the stdlib csv module and prints the counts the
C++ tests freeze as goldens (tests/goldens/northwind_counts.json). Nothing
here touches the C++ code path; regenerate the golden with

    python3 tests/oracles/northwind_counts.py > tests/goldens/northwind_counts.json
"""

import collections
import csv
import json
import os
import sys

LOCATION_KEYS = ["city", "country", "region", "address", "postalCode"]
SHIPPING_KEYS = ["shipCity", "shipCountry", "shipRegion", "shipAddress", "shipPostalCode"]
ATOMICITY_DELIMITERS = [";", "|"]


def rows(data_dir, name):
    with open(os.path.join(data_dir, name), newline="", encoding="utf-8") as f:
        return list(csv.DictReader(f))


def non_empty(row, key):
    return row.get(key, "") != ""


def tuple_of(row, keys):
    return tuple(row[k] if row[k] != "" else None for k in keys)


def main(data_dir):
    customers = rows(data_dir, "customers.csv")
    suppliers = rows(data_dir, "suppliers.csv")
    employees = rows(data_dir, "employees.csv")
    orders = rows(data_dir, "orders.csv")
    details = rows(data_dir, "order_details.csv")
    products = rows(data_dir, "products.csv")
    categories = rows(data_dir, "categories.csv")
    shippers = rows(data_dir, "shippers.csv")
    regions = rows(data_dir, "regions.csv")
    territories = rows(data_dir, "territories.csv")
    emp_terr = rows(data_dir, "employee_territories.csv")

    out = {}
    out["customers"] = len(customers)
    out["suppliers"] = len(suppliers)
    out["orders"] = len(orders)
    out["nodes"] = sum(len(t) for t in (customers, suppliers, employees, orders, products,
                                        categories, shippers, regions, territories))
    out["edges"] = {
        "PURCHASED": sum(1 for o in orders if non_empty(o, "customerID")),
        "SOLD": sum(1 for o in orders if non_empty(o, "employeeID")),
        "SHIPPED_VIA": sum(1 for o in orders if non_empty(o, "shipVia")),
        "CONTAINS": len(details),
        "SUPPLIES": sum(1 for p in products if non_empty(p, "supplierID")),
        "PART_OF": sum(1 for p in products if non_empty(p, "categoryID")),
        "REPORTS_TO": sum(1 for e in employees if non_empty(e, "reportsTo")),
        "IN_TERRITORY": len(emp_terr),
        "IN_REGION": sum(1 for t in territories if non_empty(t, "regionID")),
    }
    out["edge_total"] = sum(out["edges"].values())

    located = customers + suppliers
    out["city_pairs_customer_supplier"] = sum(1 for r in located if non_empty(r, "city"))
    out["customer_country_occurrences"] = sum(1 for r in customers if non_empty(r, "country"))
    out["customer_country_distinct"] = len({r["country"] for r in customers
                                            if non_empty(r, "country")})

    location_tuples = {tuple_of(r, LOCATION_KEYS) for r in located}
    shipping_tuples = {tuple_of(r, SHIPPING_KEYS) for r in orders}
    out["location_trait_nodes"] = len(location_tuples)
    out["shipping_trait_nodes"] = len(shipping_tuples)

    loc_occ = sum(1 for r in located for k in LOCATION_KEYS if non_empty(r, k))
    ship_occ = sum(1 for r in orders for k in SHIPPING_KEYS if non_empty(r, k))
    out["location_occurrences"] = loc_occ
    out["shipping_occurrences"] = ship_occ
    out["embedded_occurrences"] = loc_occ + ship_occ
    out["distinct_tuples"] = len(location_tuples) + len(shipping_tuples)
    out["mrr_embedded"] = out["embedded_occurrences"] / out["distinct_tuples"]
    out["duplicates_beyond_first"] = out["embedded_occurrences"] - out["distinct_tuples"]
    out["has_trait_links"] = (
        sum(1 for r in located if any(non_empty(r, k) for k in LOCATION_KEYS)) +
        sum(1 for r in orders if any(non_empty(r, k) for k in SHIPPING_KEYS)))

    # City -> Country over the LocationTrait components.
    countries_by_city = collections.defaultdict(set)
    for r in located:
        if non_empty(r, "city") and non_empty(r, "country"):
            countries_by_city[r["city"]].add(r["country"])
    out["city_country_violations"] = sum(1 for c in countries_by_city.values() if len(c) > 1)

    # Delimiter-packed text cells across every loaded property column.
    findings = 0
    for table in (customers, suppliers, employees, orders, details, products, categories,
                  shippers, regions, territories):
        for r in table:
            for v in r.values():
                for d in ATOMICITY_DELIMITERS:
                    parts = [p for p in v.split(d) if p.strip()]
                    if len(parts) >= 2:
                        findings += 1
                        break
    out["atomicity_findings"] = findings

    # Query answers used by the workload result-equivalence checks.
    out["orders_shipped_to_germany"] = sum(1 for o in orders if o["shipCountry"] == "Germany")
    out["customers_in_london_uk"] = sum(1 for c in customers
                                        if c["city"] == "London" and c["country"] == "UK")
    out["supplier_customer_same_city_pairs"] = sum(1 for s in suppliers for c in customers
                                                   if s["city"] == c["city"])
    out["customer_cities"] = len({c["city"] for c in customers})
    out["supplier_countries"] = len({s["country"] for s in suppliers})

    json.dump(out, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


if __name__ == "__main__":
    here = os.path.dirname(os.path.abspath(__file__))
    main(sys.argv[1] if len(sys.argv) > 1 else os.path.join(here, "..", "..", "data", "northwind"))
