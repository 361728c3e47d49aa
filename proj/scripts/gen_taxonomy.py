#!/usr/bin/env python3
"""Emit data/taxonomy.tsv: a small single-rooted concept tree.

Format: concept<TAB>parent<TAB>count<TAB>word1,word2,...
Counts are rough corpus-frequency stand-ins; internal nodes carry 0 and let
subtree sums do the work. Every word maps to exactly one concept (first wins
at load time, but we keep them unique here).
"""

import sys

# (concept, parent, count, [words])
ROWS = [
    ("entity", "-", 0, []),

    ("animal", "entity", 0, ["animal", "animals", "creature"]),
    ("pet", "animal", 2, ["pet", "pets"]),
    ("cat", "pet", 8, ["cat", "cats"]),
    ("kitten", "cat", 3, ["kitten", "kittens"]),
    ("dog", "pet", 8, ["dog", "dogs"]),
    ("puppy", "dog", 3, ["puppy", "puppies"]),
    ("hamster", "pet", 2, ["hamster", "hamsters"]),
    ("rabbit", "pet", 3, ["rabbit", "rabbits", "bunny", "bunnies"]),
    ("bird", "animal", 3, ["bird", "birds"]),
    ("owl", "bird", 2, ["owl", "owls"]),
    ("parrot", "bird", 2, ["parrot", "parrots"]),
    ("duck", "bird", 2, ["duck", "ducks"]),
    ("penguin", "bird", 1, ["penguin", "penguins"]),
    ("flamingo", "bird", 1, ["flamingo", "flamingos"]),
    ("reptile", "animal", 1, ["reptile", "reptiles"]),
    ("turtle", "reptile", 2, ["turtle", "turtles", "tortoise"]),
    ("lizard", "reptile", 2, ["lizard", "lizards", "gecko"]),
    ("snake", "reptile", 1, ["snake", "snakes"]),
    ("livestock", "animal", 1, []),
    ("horse", "livestock", 3, ["horse", "horses"]),
    ("pony", "horse", 2, ["pony", "ponies"]),
    ("goat", "livestock", 2, ["goat", "goats"]),
    ("sheep", "livestock", 2, ["sheep"]),
    ("cow", "livestock", 2, ["cow", "cows"]),
    ("pig", "livestock", 2, ["pig", "pigs"]),
    ("wildlife", "animal", 1, ["wildlife"]),
    ("fox", "wildlife", 2, ["fox", "foxes"]),
    ("hedgehog", "wildlife", 1, ["hedgehog", "hedgehogs"]),
    ("deer", "wildlife", 2, ["deer"]),
    ("bear", "wildlife", 2, ["bear", "bears"]),
    ("wolf", "wildlife", 1, ["wolf", "wolves"]),
    ("squirrel", "wildlife", 2, ["squirrel", "squirrels"]),
    ("monkey", "wildlife", 2, ["monkey", "monkeys"]),
    ("elephant", "wildlife", 1, ["elephant", "elephants"]),
    ("lion", "wildlife", 1, ["lion", "lions"]),
    ("tiger", "wildlife", 1, ["tiger", "tigers"]),
    ("panda", "wildlife", 1, ["panda", "pandas"]),
    ("fish", "animal", 2, ["fish"]),
    ("goldfish", "fish", 1, ["goldfish"]),

    ("person", "entity", 0, ["person", "people", "human"]),
    ("man", "person", 4, ["man", "men", "guy"]),
    ("woman", "person", 4, ["woman", "women", "lady"]),
    ("boy", "person", 3, ["boy", "boys"]),
    ("girl", "person", 3, ["girl", "girls"]),
    ("child", "person", 3, ["child", "children", "kid", "kids"]),
    ("baby", "person", 2, ["baby", "babies"]),

    ("plant", "entity", 0, ["plant", "plants"]),
    ("tree", "plant", 3, ["tree", "trees"]),
    ("flower", "plant", 3, ["flower", "flowers"]),
    ("rose", "flower", 1, ["rose", "roses"]),
    ("tulip", "flower", 1, ["tulip", "tulips"]),
    ("grass", "plant", 1, ["grass"]),
    ("cactus", "plant", 1, ["cactus"]),
    ("fern", "plant", 1, ["fern", "ferns"]),

    ("artifact", "entity", 0, ["artifact", "object", "thing"]),
    ("clothing", "artifact", 2,
     ["clothing", "clothes", "outfit", "outfits", "garment", "apparel"]),
    ("jacket", "clothing", 5, ["jacket", "jackets"]),
    ("coat", "clothing", 3, ["coat", "coats"]),
    ("shirt", "clothing", 4, ["shirt", "shirts"]),
    ("dress", "clothing", 4, ["dress", "dresses"]),
    ("skirt", "clothing", 2, ["skirt", "skirts"]),
    ("scarf", "clothing", 3, ["scarf", "scarves"]),
    ("hat", "clothing", 3, ["hat", "hats", "cap"]),
    ("sweater", "clothing", 3, ["sweater", "sweaters", "hoodie"]),
    ("uniform", "clothing", 4, ["uniform", "uniforms"]),
    ("kimono", "clothing", 2, ["kimono", "kimonos"]),
    ("tuxedo", "clothing", 2, ["tuxedo", "tuxedos"]),
    ("suit", "clothing", 3, ["suit", "suits"]),
    ("jeans", "clothing", 2, ["jeans"]),
    ("shorts", "clothing", 1, ["shorts"]),
    ("gloves", "clothing", 1, ["glove", "gloves"]),
    ("boots", "clothing", 2, ["boot", "boots"]),
    ("shoes", "clothing", 3, ["shoe", "shoes", "sneaker", "sneakers"]),
    ("sandals", "clothing", 1, ["sandal", "sandals"]),
    ("blouse", "clothing", 1, ["blouse", "blouses"]),
    ("tie", "clothing", 1, ["tie", "ties"]),
    ("belt", "clothing", 1, ["belt", "belts"]),
    ("sock", "clothing", 1, ["sock", "socks"]),
    ("furniture", "artifact", 1, ["furniture"]),
    ("chair", "furniture", 4, ["chair", "chairs"]),
    ("table", "furniture", 4, ["table", "tables"]),
    ("sofa", "furniture", 2, ["sofa", "couch"]),
    ("rug", "furniture", 3, ["rug", "rugs", "carpet"]),
    ("lamp", "furniture", 2, ["lamp", "lamps"]),
    ("desk", "furniture", 2, ["desk", "desks"]),
    ("shelf", "furniture", 2, ["shelf", "shelves"]),
    ("bed", "furniture", 3, ["bed", "beds"]),
    ("stool", "furniture", 1, ["stool", "stools"]),
    ("bench", "furniture", 1, ["bench", "benches"]),
    ("cabinet", "furniture", 1, ["cabinet", "cabinets"]),
    ("mirror", "furniture", 1, ["mirror", "mirrors"]),
    ("device", "artifact", 1, ["device", "gadget"]),
    ("phone", "device", 3, ["phone", "phones"]),
    ("camera", "device", 3, ["camera", "cameras"]),
    ("laptop", "device", 2, ["laptop", "computer"]),
    ("television", "device", 2, ["television", "tv"]),
    ("radio", "device", 1, ["radio"]),
    ("clock", "device", 1, ["clock", "clocks", "watch"]),
    ("headphones", "device", 1, ["headphones"]),
    ("photo", "device", 2, ["photo", "photos", "picture", "pictures", "selfie"]),
    ("vehicle", "artifact", 1, ["vehicle", "vehicles"]),
    ("car", "vehicle", 4, ["car", "cars"]),
    ("bike", "vehicle", 3, ["bike", "bikes", "bicycle"]),
    ("bus", "vehicle", 2, ["bus", "buses"]),
    ("train", "vehicle", 3, ["train", "trains", "tram"]),
    ("boat", "vehicle", 2, ["boat", "boats", "ferry"]),
    ("truck", "vehicle", 2, ["truck", "trucks"]),
    ("scooter", "vehicle", 1, ["scooter", "scooters"]),
    ("motorcycle", "vehicle", 1, ["motorcycle", "motorbike"]),
    ("tableware", "artifact", 1, ["tableware"]),
    ("plate", "tableware", 3, ["plate", "plates"]),
    ("bowl", "tableware", 2, ["bowl", "bowls"]),
    ("cup", "tableware", 2, ["cup", "cups", "mug"]),
    ("fork", "tableware", 1, ["fork", "forks"]),
    ("spoon", "tableware", 1, ["spoon", "spoons"]),
    ("knife", "tableware", 1, ["knife", "knives"]),
    ("glass", "tableware", 1, ["glass", "glasses"]),
    ("pan", "tableware", 2, ["pan", "pans", "skillet"]),
    ("pot", "tableware", 1, ["pot", "pots"]),
    ("tray", "tableware", 1, ["tray", "trays"]),

    ("food", "entity", 0, ["food", "foods", "meal", "meals", "snack"]),
    ("dish", "food", 1, ["dish", "dishes"]),
    ("ramen", "dish", 3, ["ramen"]),
    ("noodles", "dish", 2, ["noodle", "noodles"]),
    ("pasta", "dish", 3, ["pasta", "spaghetti"]),
    ("pizza", "dish", 3, ["pizza", "pizzas"]),
    ("burger", "dish", 2, ["burger", "burgers"]),
    ("taco", "dish", 2, ["taco", "tacos"]),
    ("curry", "dish", 2, ["curry"]),
    ("soup", "dish", 3, ["soup", "soups"]),
    ("salad", "dish", 3, ["salad", "salads"]),
    ("sandwich", "dish", 2, ["sandwich", "sandwiches"]),
    ("sushi", "dish", 3, ["sushi"]),
    ("dumplings", "dish", 2, ["dumpling", "dumplings"]),
    ("risotto", "dish", 1, ["risotto"]),
    ("steak", "dish", 2, ["steak", "steaks"]),
    ("stew", "dish", 1, ["stew"]),
    ("pancakes", "dish", 2, ["pancake", "pancakes"]),
    ("omelet", "dish", 1, ["omelet", "omelette"]),
    ("pie", "dish", 2, ["pie", "pies"]),
    ("dessert", "food", 1, ["dessert", "desserts", "sweets"]),
    ("cake", "dessert", 3, ["cake", "cakes"]),
    ("cookie", "dessert", 2, ["cookie", "cookies"]),
    ("brownie", "dessert", 1, ["brownie", "brownies"]),
    ("pudding", "dessert", 1, ["pudding"]),
    ("donut", "dessert", 1, ["donut", "donuts"]),
    ("tart", "dessert", 1, ["tart", "tarts"]),
    ("fruit", "food", 1, ["fruit", "fruits"]),
    ("mango", "fruit", 2, ["mango", "mangoes"]),
    ("apple", "fruit", 2, ["apple", "apples"]),
    ("banana", "fruit", 2, ["banana", "bananas"]),
    ("avocado", "fruit", 2, ["avocado", "avocados"]),
    ("peach", "fruit", 1, ["peach", "peaches"]),
    ("plum", "fruit", 1, ["plum", "plums"]),
    ("cherry", "fruit", 1, ["cherry", "cherries"]),
    ("grape", "fruit", 1, ["grape", "grapes"]),
    ("melon", "fruit", 1, ["melon", "melons"]),
    ("lemon", "fruit", 1, ["lemon", "lemons"]),
    ("vegetable", "food", 1, ["vegetable", "vegetables", "veggies"]),
    ("carrot", "vegetable", 1, ["carrot", "carrots"]),
    ("potato", "vegetable", 1, ["potato", "potatoes"]),
    ("tomato", "vegetable", 1, ["tomato", "tomatoes"]),
    ("onion", "vegetable", 1, ["onion", "onions"]),
    ("spinach", "vegetable", 1, ["spinach"]),
    ("cucumber", "vegetable", 1, ["cucumber", "cucumbers"]),
    ("pepper", "vegetable", 1, ["pepper", "peppers"]),
    ("corn", "vegetable", 1, ["corn"]),
    ("broccoli", "vegetable", 1, ["broccoli"]),
    ("staple", "food", 1, []),
    ("bread", "staple", 3, ["bread", "toast"]),
    ("rice", "staple", 3, ["rice"]),
    ("cheese", "staple", 2, ["cheese"]),
    ("butter", "staple", 1, ["butter"]),
    ("egg", "staple", 2, ["egg", "eggs"]),
    ("yogurt", "staple", 1, ["yogurt"]),
    ("cereal", "staple", 1, ["cereal"]),
    ("tofu", "staple", 1, ["tofu"]),
    ("meat", "food", 1, ["meat"]),
    ("chicken", "meat", 3, ["chicken"]),
    ("beef", "meat", 1, ["beef"]),
    ("pork", "meat", 1, ["pork"]),
    ("bacon", "meat", 1, ["bacon"]),
    ("ham", "meat", 1, ["ham"]),
    ("sausage", "meat", 1, ["sausage", "sausages"]),
    ("shrimp", "meat", 1, ["shrimp"]),

    ("place", "entity", 0, ["place", "places", "location", "locations", "spot"]),
    ("country", "place", 2, ["country", "countries", "nation"]),
    ("vietnam", "country", 2, ["vietnam"]),
    ("thailand", "country", 2, ["thailand"]),
    ("japan", "country", 2, ["japan"]),
    ("korea", "country", 2, ["korea"]),
    ("china", "country", 2, ["china"]),
    ("india", "country", 1, ["india"]),
    ("canada", "country", 2, ["canada"]),
    ("mexico", "country", 1, ["mexico"]),
    ("brazil", "country", 1, ["brazil"]),
    ("france", "country", 2, ["france"]),
    ("italy", "country", 2, ["italy"]),
    ("spain", "country", 1, ["spain"]),
    ("germany", "country", 1, ["germany"]),
    ("england", "country", 2, ["england", "britain", "uk"]),
    ("norway", "country", 1, ["norway"]),
    ("iceland", "country", 1, ["iceland"]),
    ("greece", "country", 1, ["greece"]),
    ("morocco", "country", 2, ["morocco"]),
    ("iran", "country", 2, ["iran"]),
    ("kenya", "country", 1, ["kenya"]),
    ("egypt", "country", 1, ["egypt"]),
    ("peru", "country", 1, ["peru"]),
    ("portugal", "country", 1, ["portugal"]),
    ("australia", "country", 1, ["australia"]),
    ("city", "place", 2, ["city", "cities", "town", "towns", "village"]),
    ("tokyo", "city", 2, ["tokyo"]),
    ("kyoto", "city", 1, ["kyoto"]),
    ("osaka", "city", 1, ["osaka"]),
    ("paris", "city", 2, ["paris"]),
    ("london", "city", 2, ["london"]),
    ("rome", "city", 1, ["rome"]),
    ("venice", "city", 1, ["venice"]),
    ("beijing", "city", 1, ["beijing"]),
    ("shanghai", "city", 1, ["shanghai"]),
    ("seoul", "city", 1, ["seoul"]),
    ("busan", "city", 1, ["busan"]),
    ("hanoi", "city", 1, ["hanoi"]),
    ("bangkok", "city", 1, ["bangkok"]),
    ("chiangmai", "city", 1, ["chiangmai"]),
    ("quebec", "city", 1, ["quebec"]),
    ("toronto", "city", 1, ["toronto"]),
    ("marrakesh", "city", 1, ["marrakesh"]),
    ("esfahan", "city", 1, ["esfahan"]),
    ("oslo", "city", 1, ["oslo"]),
    ("lisbon", "city", 1, ["lisbon"]),
    ("athens", "city", 1, ["athens"]),
    ("cairo", "city", 1, ["cairo"]),
    ("nairobi", "city", 1, ["nairobi"]),
    ("sydney", "city", 1, ["sydney"]),
    ("havana", "city", 1, ["havana"]),
    ("region", "place", 1, ["region", "regions"]),
    ("wyoming", "region", 1, ["wyoming"]),
    ("tuscany", "region", 1, ["tuscany"]),
    ("bavaria", "region", 1, ["bavaria"]),
    ("patagonia", "region", 1, ["patagonia"]),
    ("provence", "region", 1, ["provence"]),
    ("sahara", "region", 1, ["sahara"]),
    ("alps", "region", 1, ["alps"]),
    ("venue", "place", 1, ["venue"]),
    ("park", "venue", 2, ["park", "parks"]),
    ("beach", "venue", 3, ["beach", "beaches"]),
    ("market", "venue", 2, ["market", "markets"]),
    ("museum", "venue", 2, ["museum", "museums"]),
    ("cafe", "venue", 2, ["cafe", "cafes"]),
    ("restaurant", "venue", 2, ["restaurant", "restaurants", "diner"]),
    ("garden", "venue", 2, ["garden", "gardens"]),
    ("harbor", "venue", 1, ["harbor", "harbour", "port"]),
    ("temple", "venue", 2, ["temple", "temples", "shrine"]),
    ("castle", "venue", 1, ["castle", "castles"]),
    ("bridge", "venue", 1, ["bridge", "bridges"]),
    ("street", "venue", 2, ["street", "streets", "alley"]),
    ("mountain", "venue", 2, ["mountain", "mountains", "hill"]),
    ("lake", "venue", 2, ["lake", "lakes"]),
    ("river", "venue", 1, ["river", "rivers"]),
    ("forest", "venue", 2, ["forest", "forests", "woods"]),
    ("desert", "venue", 1, ["desert"]),
    ("island", "venue", 1, ["island", "islands"]),
    ("zoo", "venue", 1, ["zoo"]),
    ("farm", "venue", 1, ["farm", "farms"]),

    ("attribute", "entity", 0, ["attribute"]),
    ("color", "attribute", 2, ["color", "colors", "colour", "shade"]),
    ("red", "color", 3, ["red"]),
    ("blue", "color", 3, ["blue"]),
    ("green", "color", 3, ["green"]),
    ("yellow", "color", 2, ["yellow"]),
    ("orange_color", "color", 2, ["orange"]),
    ("purple", "color", 2, ["purple"]),
    ("pink", "color", 2, ["pink"]),
    ("brown", "color", 2, ["brown"]),
    ("black", "color", 3, ["black"]),
    ("white", "color", 3, ["white"]),
    ("gray", "color", 2, ["gray", "grey"]),
    ("teal", "color", 1, ["teal"]),
    ("maroon", "color", 1, ["maroon"]),
    ("navy", "color", 1, ["navy"]),
    ("beige", "color", 1, ["beige"]),
    ("crimson", "color", 1, ["crimson"]),
    ("turquoise", "color", 1, ["turquoise"]),
    ("gold", "color", 1, ["gold", "golden"]),
    ("silver", "color", 1, ["silver"]),
    ("violet", "color", 1, ["violet"]),
    ("material", "attribute", 1, ["material", "fabric"]),
    ("cotton", "material", 1, ["cotton"]),
    ("wool", "material", 2, ["wool", "woolen"]),
    ("silk", "material", 1, ["silk"]),
    ("leather", "material", 2, ["leather"]),
    ("denim", "material", 2, ["denim"]),
    ("linen", "material", 1, ["linen"]),
    ("velvet", "material", 1, ["velvet"]),
    ("suede", "material", 1, ["suede"]),
    ("nylon", "material", 1, ["nylon"]),
]


def main() -> None:
    out = sys.argv[1] if len(sys.argv) > 1 else "data/taxonomy.tsv"
    names = set()
    words = {}
    for concept, parent, count, ws in ROWS:
        assert concept not in names, f"duplicate concept {concept}"
        names.add(concept)
        for w in ws:
            assert w not in words, f"word {w!r} in both {words[w]} and {concept}"
            words[w] = concept
    for concept, parent, count, ws in ROWS:
        assert parent == "-" or parent in names, f"unknown parent {parent}"

    with open(out, "w", encoding="utf-8") as f:
        f.write("# concept\tparent\tcount\twords\n")
        for concept, parent, count, ws in ROWS:
            f.write(f"{concept}\t{parent}\t{count}\t{','.join(ws)}\n")
    print(f"wrote {len(ROWS)} concepts, {len(words)} words -> {out}")


if __name__ == "__main__":
    main()
