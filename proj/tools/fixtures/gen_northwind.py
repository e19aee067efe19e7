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
"""Writes the pinned Northwind-shaped CSV snapshot under data/northwind/.

Customer, supplier, employee, shipper, category, region and territory rows
follow the widely distributed Northwind sample. Orders, order lines and
product rows are generated from a fixed seed with the sample's cardinalities
(830 orders, 2155 order lines, 77 products). Every order ships to the
ordering customer's address, as in the sample.

The output is committed; rerunning this script must reproduce it
byte-for-byte.
"""

import csv
import datetime
import os
import random
import sys

SEED = 19960704

# id, company, address, city, region, postalCode, country, orders placed
CUSTOMERS = [
    ("ALFKI", "Alfreds Futterkiste", "Obere Str. 57", "Berlin", "", "12209", "Germany", 6),
    ("ANATR", "Ana Trujillo Emparedados y helados", "Avda. de la Constitución 2222", "México D.F.", "", "05021", "Mexico", 4),
    ("ANTON", "Antonio Moreno Taquería", "Mataderos  2312", "México D.F.", "", "05023", "Mexico", 7),
    ("AROUT", "Around the Horn", "120 Hanover Sq.", "London", "", "WA1 1DP", "UK", 13),
    ("BERGS", "Berglunds snabbköp", "Berguvsvägen  8", "Luleå", "", "S-958 22", "Sweden", 18),
    ("BLAUS", "Blauer See Delikatessen", "Forsterstr. 57", "Mannheim", "", "68306", "Germany", 7),
    ("BLONP", "Blondesddsl père et fils", "24, place Kléber", "Strasbourg", "", "67000", "France", 11),
    ("BOLID", "Bólido Comidas preparadas", "C/ Araquil, 67", "Madrid", "", "28023", "Spain", 3),
    ("BONAP", "Bon app'", "12, rue des Bouchers", "Marseille", "", "13008", "France", 17),
    ("BOTTM", "Bottom-Dollar Markets", "23 Tsawassen Blvd.", "Tsawassen", "BC", "T2F 8M4", "Canada", 14),
    ("BSBEV", "B's Beverages", "Fauntleroy Circus", "London", "", "EC2 5NT", "UK", 10),
    ("CACTU", "Cactus Comidas para llevar", "Cerrito 333", "Buenos Aires", "", "1010", "Argentina", 6),
    ("CENTC", "Centro comercial Moctezuma", "Sierras de Granada 9993", "México D.F.", "", "05022", "Mexico", 1),
    ("CHOPS", "Chop-suey Chinese", "Hauptstr. 29", "Bern", "", "3012", "Switzerland", 8),
    ("COMMI", "Comércio Mineiro", "Av. dos Lusíadas, 23", "Sao Paulo", "SP", "05432-043", "Brazil", 5),
    ("CONSH", "Consolidated Holdings", "Berkeley Gardens 12  Brewery", "London", "", "WX1 6LT", "UK", 3),
    ("DRACD", "Drachenblut Delikatessen", "Walserweg 21", "Aachen", "", "52066", "Germany", 6),
    ("DUMON", "Du monde entier", "67, rue des Cinquante Otages", "Nantes", "", "44000", "France", 4),
    ("EASTC", "Eastern Connection", "35 King George", "London", "", "WX3 6FW", "UK", 8),
    ("ERNSH", "Ernst Handel", "Kirchgasse 6", "Graz", "", "8010", "Austria", 30),
    ("FAMIA", "Familia Arquibaldo", "Rua Orós, 92", "Sao Paulo", "SP", "05442-030", "Brazil", 7),
    ("FISSA", "FISSA Fabrica Inter. Salchichas S.A.", "C/ Moralzarzal, 86", "Madrid", "", "28034", "Spain", 0),
    ("FOLIG", "Folies gourmandes", "184, chaussée de Tournai", "Lille", "", "59000", "France", 5),
    ("FOLKO", "Folk och fä HB", "Åkergatan 24", "Bräcke", "", "S-844 67", "Sweden", 19),
    ("FRANK", "Frankenversand", "Berliner Platz 43", "München", "", "80805", "Germany", 15),
    ("FRANR", "France restauration", "54, rue Royale", "Nantes", "", "44000", "France", 3),
    ("FRANS", "Franchi S.p.A.", "Via Monte Bianco 34", "Torino", "", "10100", "Italy", 6),
    ("FURIB", "Furia Bacalhau e Frutos do Mar", "Jardim das rosas n. 32", "Lisboa", "", "1675", "Portugal", 8),
    ("GALED", "Galería del gastrónomo", "Rambla de Cataluña, 23", "Barcelona", "", "08022", "Spain", 5),
    ("GODOS", "Godos Cocina Típica", "C/ Romero, 33", "Sevilla", "", "41101", "Spain", 10),
    ("GOURL", "Gourmet Lanchonetes", "Av. Brasil, 442", "Campinas", "SP", "04876-786", "Brazil", 9),
    ("GREAL", "Great Lakes Food Market", "2732 Baker Blvd.", "Eugene", "OR", "97403", "USA", 11),
    ("GROSR", "GROSELLA-Restaurante", "5ª Ave. Los Palos Grandes", "Caracas", "DF", "1081", "Venezuela", 2),
    ("HANAR", "Hanari Carnes", "Rua do Paço, 67", "Rio de Janeiro", "RJ", "05454-876", "Brazil", 14),
    ("HILAA", "HILARION-Abastos", "Carrera 22 con Ave. Carlos Soublette #8-35", "San Cristóbal", "Táchira", "5022", "Venezuela", 18),
    ("HUNGC", "Hungry Coyote Import Store", "City Center Plaza 516 Main St.", "Elgin", "OR", "97827", "USA", 5),
    ("HUNGO", "Hungry Owl All-Night Grocers", "8 Johnstown Road", "Cork", "Co. Cork", "", "Ireland", 19),
    ("ISLAT", "Island Trading", "Garden House Crowther Way", "Cowes", "Isle of Wight", "PO31 7PJ", "UK", 10),
    ("KOENE", "Königlich Essen", "Maubelstr. 90", "Brandenburg", "", "14776", "Germany", 14),
    ("LACOR", "La corne d'abondance", "67, avenue de l'Europe", "Versailles", "", "78000", "France", 4),
    ("LAMAI", "La maison d'Asie", "1 rue Alsace-Lorraine", "Toulouse", "", "31000", "France", 14),
    ("LAUGB", "Laughing Bacchus Wine Cellars", "1900 Oak St.", "Vancouver", "BC", "V3F 2K1", "Canada", 3),
    ("LAZYK", "Lazy K Kountry Store", "12 Orchestra Terrace", "Walla Walla", "WA", "99362", "USA", 2),
    ("LEHMS", "Lehmanns Marktstand", "Magazinweg 7", "Frankfurt a.M.", "", "60528", "Germany", 15),
    ("LETSS", "Let's Stop N Shop", "87 Polk St. Suite 5", "San Francisco", "CA", "94117", "USA", 4),
    ("LILAS", "LILA-Supermercado", "Carrera 52 con Ave. Bolívar #65-98 Llano Largo", "Barquisimeto", "Lara", "3508", "Venezuela", 14),
    ("LINOD", "LINO-Delicateses", "Ave. 5 de Mayo Porlamar", "I. de Margarita", "Nueva Esparta", "4980", "Venezuela", 12),
    ("LONEP", "Lonesome Pine Restaurant", "89 Chiaroscuro Rd.", "Portland", "OR", "97219", "USA", 8),
    ("MAGAA", "Magazzini Alimentari Riuniti", "Via Ludovico il Moro 22", "Bergamo", "", "24100", "Italy", 10),
    ("MAISD", "Maison Dewey", "Rue Joseph-Bens 532", "Bruxelles", "", "B-1180", "Belgium", 7),
    ("MEREP", "Mère Paillarde", "43 rue St. Laurent", "Montréal", "Québec", "H1J 1C3", "Canada", 13),
    ("MORGK", "Morgenstern Gesundkost", "Heerstr. 22", "Leipzig", "", "04179", "Germany", 5),
    ("NORTS", "North/South", "South House 300 Queensbridge", "London", "", "SW7 1RZ", "UK", 3),
    ("OCEAN", "Océano Atlántico Ltda.", "Ing. Gustavo Moncada 8585 Piso 20-A", "Buenos Aires", "", "1010", "Argentina", 5),
    ("OLDWO", "Old World Delicatessen", "2743 Bering St.", "Anchorage", "AK", "99508", "USA", 10),
    ("OTTIK", "Ottilies Käseladen", "Mehrheimerstr. 369", "Köln", "", "50739", "Germany", 10),
    ("PARIS", "Paris spécialités", "265, boulevard Charonne", "Paris", "", "75012", "France", 0),
    ("PERIC", "Pericles Comidas clásicas", "Calle Dr. Jorge Cash 321", "México D.F.", "", "05033", "Mexico", 6),
    ("PICCO", "Piccolo und mehr", "Geislweg 14", "Salzburg", "", "5020", "Austria", 10),
    ("PRINI", "Princesa Isabel Vinhos", "Estrada da saúde n. 58", "Lisboa", "", "1756", "Portugal", 5),
    ("QUEDE", "Que Delícia", "Rua da Panificadora, 12", "Rio de Janeiro", "RJ", "02389-673", "Brazil", 9),
    ("QUEEN", "Queen Cozinha", "Alameda dos Canàrios, 891", "Sao Paulo", "SP", "05487-020", "Brazil", 13),
    ("QUICK", "QUICK-Stop", "Taucherstraße 10", "Cunewalde", "", "01307", "Germany", 28),
    ("RANCH", "Rancho grande", "Av. del Libertador 900", "Buenos Aires", "", "1010", "Argentina", 5),
    ("RATTC", "Rattlesnake Canyon Grocery", "2817 Milton Dr.", "Albuquerque", "NM", "87110", "USA", 18),
    ("REGGC", "Reggiani Caseifici", "Strada Provinciale 124", "Reggio Emilia", "", "42100", "Italy", 12),
    ("RICAR", "Ricardo Adocicados", "Av. Copacabana, 267", "Rio de Janeiro", "RJ", "02389-890", "Brazil", 11),
    ("RICSU", "Richter Supermarkt", "Grenzacherweg 237", "Genève", "", "1203", "Switzerland", 10),
    ("ROMEY", "Romero y tomillo", "Gran Vía, 1", "Madrid", "", "28001", "Spain", 5),
    ("SANTG", "Santé Gourmet", "Erling Skakkes gate 78", "Stavern", "", "4110", "Norway", 6),
    ("SAVEA", "Save-a-lot Markets", "187 Suffolk Ln.", "Boise", "ID", "83720", "USA", 31),
    ("SEVES", "Seven Seas Imports", "90 Wadhurst Rd.", "London", "", "OX15 4NB", "UK", 9),
    ("SIMOB", "Simons bistro", "Vinbæltet 34", "Kobenhavn", "", "1734", "Denmark", 7),
    ("SPECD", "Spécialités du monde", "25, rue Lauriston", "Paris", "", "75016", "France", 4),
    ("SPLIR", "Split Rail Beer & Ale", "P.O. Box 555", "Lander", "WY", "82520", "USA", 9),
    ("SUPRD", "Suprêmes délices", "Boulevard Tirou, 255", "Charleroi", "", "B-6000", "Belgium", 12),
    ("THEBI", "The Big Cheese", "89 Jefferson Way Suite 2", "Portland", "OR", "97201", "USA", 4),
    ("THECR", "The Cracker Box", "55 Grizzly Peak Rd.", "Butte", "MT", "59801", "USA", 3),
    ("TOMSP", "Toms Spezialitäten", "Luisenstr. 48", "Münster", "", "44087", "Germany", 6),
    ("TORTU", "Tortuga Restaurante", "Avda. Azteca 123", "México D.F.", "", "05033", "Mexico", 10),
    ("TRADH", "Tradição Hipermercados", "Av. Inês de Castro, 414", "Sao Paulo", "SP", "05634-030", "Brazil", 7),
    ("TRAIH", "Trail's Head Gourmet Provisioners", "722 DaVinci Blvd.", "Kirkland", "WA", "98034", "USA", 3),
    ("VAFFE", "Vaffeljernet", "Smagsloget 45", "Århus", "", "8200", "Denmark", 11),
    ("VICTE", "Victuailles en stock", "2, rue du Commerce", "Lyon", "", "69004", "France", 10),
    ("VINET", "Vins et alcools Chevalier", "59 rue de l'Abbaye", "Reims", "", "51100", "France", 5),
    ("WANDK", "Die Wandernde Kuh", "Adenauerallee 900", "Stuttgart", "", "70563", "Germany", 10),
    ("WARTH", "Wartian Herkku", "Torikatu 38", "Oulu", "", "90110", "Finland", 15),
    ("WELLI", "Wellington Importadora", "Rua do Mercado, 12", "Resende", "SP", "08737-363", "Brazil", 8),
    ("WHITC", "White Clover Markets", "305 - 14th Ave. S. Suite 3B", "Seattle", "WA", "98128", "USA", 14),
    ("WILMK", "Wilman Kala", "Keskuskatu 45", "Helsinki", "", "21240", "Finland", 7),
    ("WOLZA", "Wolski  Zajazd", "ul. Filtrowa 68", "Warszawa", "", "01-012", "Poland", 7),
]

# id, company, address, city, region, postalCode, country
SUPPLIERS = [
    (1, "Exotic Liquids", "49 Gilbert St.", "London", "", "EC1 4SD", "UK"),
    (2, "New Orleans Cajun Delights", "P.O. Box 78934", "New Orleans", "LA", "70117", "USA"),
    (3, "Grandma Kelly's Homestead", "707 Oxford Rd.", "Ann Arbor", "MI", "48104", "USA"),
    (4, "Tokyo Traders", "9-8 Sekimai Musashino-shi", "Tokyo", "", "100", "Japan"),
    (5, "Cooperativa de Quesos 'Las Cabras'", "Calle del Rosal 4", "Oviedo", "Asturias", "33007", "Spain"),
    (6, "Mayumi's", "92 Setsuko Chuo-ku", "Osaka", "", "545", "Japan"),
    (7, "Pavlova, Ltd.", "74 Rose St. Moonie Ponds", "Melbourne", "Victoria", "3058", "Australia"),
    (8, "Specialty Biscuits, Ltd.", "29 King's Way", "Manchester", "", "M14 GSD", "UK"),
    (9, "PB Knäckebröd AB", "Kaloadagatan 13", "Göteborg", "", "S-345 67", "Sweden"),
    (10, "Refrescos Americanas LTDA", "Av. das Americanas 12.890", "Sao Paulo", "", "5442", "Brazil"),
    (11, "Heli Süßwaren GmbH & Co. KG", "Tiergartenstraße 5", "Berlin", "", "10785", "Germany"),
    (12, "Plutzer Lebensmittelgroßmärkte AG", "Bogenallee 51", "Frankfurt", "", "60439", "Germany"),
    (13, "Nord-Ost-Fisch Handelsgesellschaft mbH", "Frahmredder 112a", "Cuxhaven", "", "27478", "Germany"),
    (14, "Formaggi Fortini s.r.l.", "Viale Dante, 75", "Ravenna", "", "48100", "Italy"),
    (15, "Norske Meierier", "Hatlevegen 5", "Sandvika", "", "1320", "Norway"),
    (16, "Bigfoot Breweries", "3400 - 8th Avenue Suite 210", "Bend", "OR", "97101", "USA"),
    (17, "Svensk Sjöföda AB", "Brovallavägen 231", "Stockholm", "", "S-123 45", "Sweden"),
    (18, "Aux joyeux ecclésiastiques", "203, Rue des Francs-Bourgeois", "Paris", "", "75004", "France"),
    (19, "New England Seafood Cannery", "Order Processing Dept. 2100 Paul Revere Blvd.", "Boston", "MA", "02134", "USA"),
    (20, "Leka Trading", "471 Serangoon Loop, Suite #402", "Singapore", "", "0512", "Singapore"),
    (21, "Lyngbysild", "Lyngbysild Fiskebakken 10", "Lyngby", "", "2800", "Denmark"),
    (22, "Zaanse Snoepfabriek", "Verkoop Rijnweg 22", "Zaandam", "", "9999 ZZ", "Netherlands"),
    (23, "Karkki Oy", "Valtakatu 12", "Lappeenranta", "", "53120", "Finland"),
    (24, "G'day, Mate", "170 Prince Edward Parade Hunter's Hill", "Sydney", "NSW", "2042", "Australia"),
    (25, "Ma Maison", "2960 Rue St. Laurent", "Montréal", "Québec", "H1J 1C3", "Canada"),
    (26, "Pasta Buttini s.r.l.", "Via dei Gelsomini, 153", "Salerno", "", "84100", "Italy"),
    (27, "Escargots Nouveaux", "22, rue H. Voiron", "Montceau", "", "71300", "France"),
    (28, "Gai pâturage", "Bat. B 3, rue des Alpes", "Annecy", "", "74000", "France"),
    (29, "Forêts d'érables", "148 rue Chasseur", "Ste-Hyacinthe", "Québec", "J2S 7S8", "Canada"),
]

# id, last, first, title, address, city, region, postalCode, country, reportsTo
EMPLOYEES = [
    (1, "Davolio", "Nancy", "Sales Representative", "507 - 20th Ave. E. Apt. 2A", "Seattle", "WA", "98122", "USA", 2),
    (2, "Fuller", "Andrew", "Vice President, Sales", "908 W. Capital Way", "Tacoma", "WA", "98401", "USA", None),
    (3, "Leverling", "Janet", "Sales Representative", "722 Moss Bay Blvd.", "Kirkland", "WA", "98033", "USA", 2),
    (4, "Peacock", "Margaret", "Sales Representative", "4110 Old Redmond Rd.", "Redmond", "WA", "98052", "USA", 2),
    (5, "Buchanan", "Steven", "Sales Manager", "14 Garrett Hill", "London", "", "SW1 8JR", "UK", 2),
    (6, "Suyama", "Michael", "Sales Representative", "Coventry House Miner Rd.", "London", "", "EC2 7JR", "UK", 5),
    (7, "King", "Robert", "Sales Representative", "Edgeham Hollow Winchester Way", "London", "", "RG1 9SP", "UK", 5),
    (8, "Callahan", "Laura", "Inside Sales Coordinator", "4726 - 11th Ave. N.E.", "Seattle", "WA", "98105", "USA", 2),
    (9, "Dodsworth", "Anne", "Sales Representative", "7 Houndstooth Rd.", "London", "", "WG2 7LT", "UK", 5),
]

SHIPPERS = [(1, "Speedy Express", "(503) 555-9831"),
            (2, "United Package", "(503) 555-3199"),
            (3, "Federal Shipping", "(503) 555-9931")]

CATEGORIES = [
    (1, "Beverages", "Soft drinks, coffees, teas, beers, and ales"),
    (2, "Condiments", "Sweet and savory sauces, relishes, spreads, and seasonings"),
    (3, "Confections", "Desserts, candies, and sweet breads"),
    (4, "Dairy Products", "Cheeses"),
    (5, "Grains/Cereals", "Breads, crackers, pasta, and cereal"),
    (6, "Meat/Poultry", "Prepared meats"),
    (7, "Produce", "Dried fruit and bean curd"),
    (8, "Seafood", "Seaweed and fish"),
]

REGIONS = [(1, "Eastern"), (2, "Western"), (3, "Northern"), (4, "Southern")]

# territoryID, description, regionID
TERRITORIES = [
    ("01581", "Westboro", 1), ("01730", "Bedford", 1), ("01833", "Georgetow", 1),
    ("02116", "Boston", 1), ("02139", "Cambridge", 1), ("02184", "Braintree", 1),
    ("02903", "Providence", 1), ("03049", "Hollis", 3), ("03801", "Portsmouth", 3),
    ("06897", "Wilton", 1), ("07960", "Morristown", 1), ("08837", "Edison", 1),
    ("10019", "New York", 1), ("10038", "New York", 1), ("11747", "Mellvile", 1),
    ("14450", "Fairport", 1), ("19428", "Philadelphia", 3), ("19713", "Neward", 1),
    ("20852", "Rockville", 1), ("27403", "Greensboro", 1), ("27511", "Cary", 1),
    ("29202", "Columbia", 4), ("30346", "Atlanta", 4), ("31406", "Savannah", 4),
    ("32859", "Orlando", 4), ("33607", "Tampa", 4), ("40222", "Louisville", 1),
    ("44122", "Beachwood", 3), ("45839", "Findlay", 3), ("48075", "Southfield", 3),
    ("48084", "Troy", 3), ("48304", "Bloomfield Hills", 3), ("53404", "Racine", 3),
    ("55113", "Roseville", 3), ("55439", "Minneapolis", 3), ("60179", "Hoffman Estates", 2),
    ("60601", "Chicago", 2), ("72716", "Bentonville", 4), ("75234", "Dallas", 4),
    ("78759", "Austin", 4), ("80202", "Denver", 2), ("80909", "Colorado Springs", 2),
    ("85014", "Phoenix", 2), ("85251", "Scottsdale", 2), ("90405", "Santa Monica", 2),
    ("94025", "Menlo Park", 2), ("94105", "San Francisco", 2), ("95008", "Campbell", 2),
    ("95054", "Santa Clara", 2), ("95060", "Santa Cruz", 2), ("98004", "Bellevue", 2),
    ("98052", "Redmond", 2), ("98104", "Seattle", 2),
]

EMPLOYEE_TERRITORIES = {
    1: ["06897", "19713"],
    2: ["01581", "01730", "01833", "02116", "02139", "02184", "40222"],
    3: ["30346", "31406", "32859", "33607"],
    4: ["20852", "27403", "27511"],
    5: ["02903", "07960", "08837", "10019", "10038", "11747", "14450"],
    6: ["85014", "85251", "98004", "98052", "98104"],
    7: ["60179", "60601", "80202", "80909", "90405", "94025", "94105", "95008", "95054", "95060"],
    8: ["19428", "44122", "45839", "53404"],
    9: ["03049", "03801", "48075", "48084", "48304", "55113", "55439"],
}

N_ORDERS = 830
N_ORDER_LINES = 2155
N_PRODUCTS = 77
FIRST_ORDER_ID = 10248


def write(path, header, rows):
    with open(path, "w", newline="", encoding="utf-8") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(header)
        for r in rows:
            w.writerow(["" if v is None else v for v in r])


def main(out_dir):
    rng = random.Random(SEED)
    os.makedirs(out_dir, exist_ok=True)

    assert len(CUSTOMERS) == 91 and len(SUPPLIERS) == 29
    assert sum(c[7] for c in CUSTOMERS) == N_ORDERS
    assert sum(len(v) for v in EMPLOYEE_TERRITORIES.values()) == 49

    write(os.path.join(out_dir, "customers.csv"),
          ["customerID", "companyName", "address", "city", "region", "postalCode", "country"],
          [c[:7] for c in CUSTOMERS])
    write(os.path.join(out_dir, "suppliers.csv"),
          ["supplierID", "companyName", "address", "city", "region", "postalCode", "country"],
          SUPPLIERS)
    write(os.path.join(out_dir, "employees.csv"),
          ["employeeID", "lastName", "firstName", "title", "address", "city", "region",
           "postalCode", "country", "reportsTo"],
          EMPLOYEES)
    write(os.path.join(out_dir, "shippers.csv"), ["shipperID", "companyName", "phone"], SHIPPERS)
    write(os.path.join(out_dir, "categories.csv"),
          ["categoryID", "categoryName", "description"], CATEGORIES)
    write(os.path.join(out_dir, "regions.csv"), ["regionID", "regionDescription"], REGIONS)
    write(os.path.join(out_dir, "territories.csv"),
          ["territoryID", "territoryDescription", "regionID"], TERRITORIES)
    write(os.path.join(out_dir, "employee_territories.csv"), ["employeeID", "territoryID"],
          [(e, t) for e, ts in sorted(EMPLOYEE_TERRITORIES.items()) for t in ts])

    products = []
    for pid in range(1, N_PRODUCTS + 1):
        supplier = (pid * 7) % 29 + 1
        category = (pid * 5) % 8 + 1
        price = round(rng.uniform(2.5, 120.0), 2)
        stock = rng.randint(0, 125)
        discontinued = 1 if rng.random() < 0.1 else 0
        products.append((pid, "Product %02d" % pid, supplier, category, "%.2f" % price,
                         stock, discontinued))
    write(os.path.join(out_dir, "products.csv"),
          ["productID", "productName", "supplierID", "categoryID", "unitPrice", "unitsInStock",
           "discontinued"], products)

    order_customers = [c for c in CUSTOMERS for _ in range(c[7])]
    rng.shuffle(order_customers)

    line_counts = [1] * N_ORDERS
    remaining = N_ORDER_LINES - N_ORDERS
    while remaining > 0:
        i = rng.randrange(N_ORDERS)
        if line_counts[i] < 6:
            line_counts[i] += 1
            remaining -= 1

    day = datetime.date(1996, 7, 4)
    orders, lines = [], []
    for i, cust in enumerate(order_customers):
        oid = FIRST_ORDER_ID + i
        day += datetime.timedelta(days=rng.choice([0, 1, 1, 1, 2]))
        required = day + datetime.timedelta(days=28)
        shipped = day + datetime.timedelta(days=rng.randint(1, 30)) if i < N_ORDERS - 21 else None
        orders.append((oid, cust[0], rng.randint(1, 9), day.isoformat(), required.isoformat(),
                       shipped.isoformat() if shipped else None, rng.randint(1, 3),
                       "%.2f" % round(rng.uniform(0.02, 1007.64), 2), cust[1], cust[2], cust[3],
                       cust[4], cust[5], cust[6]))
        for pid in sorted(rng.sample(range(1, N_PRODUCTS + 1), line_counts[i])):
            price = products[pid - 1][4]
            lines.append((oid, pid, price, rng.randint(1, 120),
                          rng.choice(["0", "0", "0", "0.05", "0.1", "0.15", "0.2", "0.25"])))

    write(os.path.join(out_dir, "orders.csv"),
          ["orderID", "customerID", "employeeID", "orderDate", "requiredDate", "shippedDate",
           "shipVia", "freight", "shipName", "shipAddress", "shipCity", "shipRegion",
           "shipPostalCode", "shipCountry"], orders)
    write(os.path.join(out_dir, "order_details.csv"),
          ["orderID", "productID", "unitPrice", "quantity", "discount"], lines)


if __name__ == "__main__":
    here = os.path.dirname(os.path.abspath(__file__))
    main(sys.argv[1] if len(sys.argv) > 1 else os.path.join(here, "..", "..", "data", "northwind"))
