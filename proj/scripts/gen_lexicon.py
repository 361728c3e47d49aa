#!/usr/bin/env python3
"""Generate data/lexicon.tsv: token<TAB>tag, one entry per line.

Priority is encoded by emission order (first entry per token wins in the
loader): function words, then colors, place names, nouns, verbs, adjectives,
adverbs. Inflected forms are generated from stems. Proper nouns are folded to
NN because the tokenizer lowercases everything.
"""

FUNCTION_WORDS = {
    # determiners
    "a": "DT", "an": "DT", "the": "DT", "this": "DT", "that": "DT",
    "these": "DT", "those": "DT", "each": "DT", "every": "DT", "some": "DT",
    "any": "DT", "no": "DT", "another": "DT", "both": "DT", "either": "DT",
    "neither": "DT", "all": "PDT", "such": "PDT", "half": "PDT",
    # pronouns
    "i": "PRP", "you": "PRP", "he": "PRP", "she": "PRP", "it": "PRP",
    "we": "PRP", "they": "PRP", "me": "PRP", "him": "PRP", "them": "PRP",
    "us": "PRP", "myself": "PRP", "yourself": "PRP", "himself": "PRP",
    "herself": "PRP", "itself": "PRP", "ourselves": "PRP", "themselves": "PRP",
    "something": "PRP", "anything": "PRP", "nothing": "PRP", "everything": "PRP",
    "someone": "PRP", "anyone": "PRP", "everyone": "PRP", "nobody": "PRP",
    # possessives
    "my": "PRP$", "your": "PRP$", "his": "PRP$", "her": "PRP$", "its": "PRP$",
    "our": "PRP$", "their": "PRP$",
    # prepositions / subordinating conjunctions
    "in": "IN", "on": "IN", "at": "IN", "of": "IN", "from": "IN", "by": "IN",
    "with": "IN", "without": "IN", "about": "IN", "against": "IN",
    "between": "IN", "into": "IN", "through": "IN", "during": "IN",
    "before": "IN", "after": "IN", "above": "IN", "below": "IN", "under": "IN",
    "over": "IN", "near": "IN", "beside": "IN", "behind": "IN", "along": "IN",
    "across": "IN", "around": "IN", "among": "IN", "inside": "IN",
    "outside": "IN", "toward": "IN", "towards": "IN", "upon": "IN",
    "within": "IN", "beyond": "IN", "since": "IN", "until": "IN", "per": "IN",
    "if": "IN", "because": "IN", "while": "IN", "although": "IN", "though": "IN",
    "unless": "IN", "whether": "IN", "as": "IN", "than": "IN", "like": "IN",
    # coordinating conjunctions
    "and": "CC", "or": "CC", "but": "CC", "nor": "CC", "so": "CC", "yet": "CC",
    "plus": "CC",
    # to / existential / modals
    "to": "TO", "there": "EX",
    "can": "MD", "could": "MD", "will": "MD", "would": "MD", "shall": "MD",
    "should": "MD", "may": "MD", "might": "MD", "must": "MD",
    # be / have / do
    "am": "VBP", "is": "VBZ", "are": "VBP", "was": "VBD", "were": "VBD",
    "be": "VB", "been": "VBN", "being": "VBG",
    "have": "VBP", "has": "VBZ", "had": "VBD", "having": "VBG",
    "do": "VBP", "does": "VBZ", "did": "VBD", "doing": "VBG", "done": "VBN",
    # contraction pieces produced by the tokenizer
    "'s": "VBZ", "'m": "VBP", "'re": "VBP", "'ve": "VBP", "'ll": "MD",
    "'d": "MD", "n't": "RB",
    # wh-words
    "what": "WP", "who": "WP", "whom": "WP", "whose": "WP$", "which": "WDT",
    "where": "WRB", "when": "WRB", "why": "WRB", "how": "WRB",
    # interjections / chat tokens
    "wow": "UH", "oh": "UH", "hey": "UH", "yes": "UH", "yeah": "UH",
    "yep": "UH", "nope": "UH", "hmm": "UH", "ugh": "UH", "wo": "UH",
    "lol": "UH", "haha": "UH", "hehe": "UH", "omg": "UH", "yay": "UH",
    "ok": "UH", "okay": "UH", "please": "UH", "thanks": "UH", "hello": "UH",
    "hi": "UH", "bye": "UH", "hah": "UH", "huh": "UH", "ah": "UH", "aw": "UH",
    "ooh": "UH", "whoa": "UH", "yikes": "UH", "oops": "UH",
    # common adverbs that would otherwise mis-tag
    "not": "RB", "very": "RB", "too": "RB", "also": "RB", "just": "RB",
    "only": "RB", "quite": "RB", "really": "RB", "pretty": "RB", "still": "RB",
    "always": "RB", "never": "RB", "often": "RB", "sometimes": "RB",
    "usually": "RB", "maybe": "RB", "perhaps": "RB", "here": "RB",
    "somewhere": "RB", "anywhere": "RB", "everywhere": "RB", "nowhere": "RB",
    "now": "RB", "then": "RB", "soon": "RB", "today": "RB", "yesterday": "RB",
    "tomorrow": "RB", "again": "RB", "already": "RB", "almost": "RB",
    "even": "RB", "away": "RB", "back": "RB", "together": "RB", "instead": "RB",
    "else": "RB", "once": "RB", "twice": "RB", "far": "RB", "well": "RB",
    "more": "RBR", "most": "RBS", "less": "RBR", "least": "RBS",
    "better": "JJR", "best": "JJS", "worse": "JJR", "worst": "JJS",
    # numbers as words
    "one": "CD", "two": "CD", "three": "CD", "four": "CD", "five": "CD",
    "six": "CD", "seven": "CD", "eight": "CD", "nine": "CD", "ten": "CD",
    "eleven": "CD", "twelve": "CD", "twenty": "CD", "thirty": "CD",
    "forty": "CD", "fifty": "CD", "hundred": "CD", "thousand": "CD",
    "million": "CD", "first": "JJ", "second": "JJ", "third": "JJ",
    # particles
    "up": "RP", "down": "RP", "out": "RP", "off": "RP",
}

COLORS = """red blue green yellow orange purple pink brown black white gray
grey beige maroon navy teal turquoise violet magenta cyan crimson scarlet
golden silver ivory tan khaki lavender lilac peach salmon coral mint olive
burgundy indigo charcoal cream amber emerald ruby sapphire pearl bronze
copper platinum rose fuchsia mauve ochre sepia taupe aqua azure cobalt""".split()

PLACES = """vietnam thailand chiangmai bangkok hanoi saigon cambodia laos
myanmar singapore malaysia indonesia bali java philippines manila japan tokyo
kyoto osaka korea seoul china beijing shanghai india delhi mumbai nepal
kathmandu tibet mongolia russia moscow europe france paris london england
britain scotland ireland dublin wales spain madrid barcelona portugal lisbon
italy rome venice florence milan germany berlin munich austria vienna
switzerland zurich geneva belgium brussels netherlands amsterdam denmark
copenhagen sweden stockholm norway oslo finland helsinki iceland greece
athens turkey istanbul egypt cairo morocco kenya nairobi africa australia
sydney melbourne zealand auckland america usa canada toronto vancouver
montreal mexico brazil rio argentina peru lima chile colombia cuba havana
hawaii alaska california texas florida york chicago boston seattle portland
denver vegas miami orlando downtown uptown chinatown wyoming hollywood""".split()

NOUNS = """time year day week month hour minute morning evening night noon
midnight afternoon sunrise sunset weekend holiday birthday anniversary season
spring summer autumn winter world earth country city town village capital
state region area place spot location site home house apartment flat room
bedroom bathroom kitchen garage basement attic balcony porch yard garden
backyard lawn fence gate door window wall floor ceiling roof stair stairway
hallway corridor closet shelf drawer cupboard cabinet counter desk table chair
sofa couch bench stool bed mattress pillow blanket sheet curtain carpet rug
mat lamp light candle mirror clock frame picture photo photograph image
painting poster print sculpture statue vase pot pan plate bowl cup mug glass
bottle jar can fork knife spoon chopstick napkin towel sponge soap shampoo
brush comb razor toothbrush toothpaste sink bathtub shower toilet fridge
refrigerator freezer oven stove microwave toaster blender kettle grill pot
dishwasher washer dryer vacuum broom mop bucket trash garbage bin basket bag
backpack suitcase luggage purse wallet pocket key lock chain rope string wire
cord cable plug socket switch button remote phone telephone mobile laptop
computer keyboard mouse screen monitor tablet camera lens tripod flash
battery charger speaker headphone microphone radio television animal pet cat
kitten dog puppy bird parrot pigeon sparrow eagle hawk owl duck goose swan
chicken hen rooster turkey fish goldfish shark whale dolphin seal otter
turtle tortoise frog toad snake lizard gecko crocodile alligator rabbit bunny
hamster mouse rat squirrel chipmunk hedgehog bat horse pony donkey mule zebra
cow bull calf ox buffalo bison goat sheep lamb pig piglet boar deer moose elk
reindeer bear panda koala monkey ape gorilla chimp baboon lion tiger leopard
cheetah jaguar lynx fox wolf coyote raccoon skunk badger beaver elephant
rhino hippo giraffe camel llama alpaca kangaroo wallaby wombat sloth anteater
armadillo porcupine weasel ferret mink mole insect bug ant bee wasp hornet
butterfly moth beetle ladybug dragonfly mosquito fly flea spider scorpion
crab lobster shrimp snail slug worm jellyfish octopus squid starfish coral
food meal breakfast lunch dinner supper snack dessert appetizer dish recipe
cuisine bread toast loaf roll bun bagel croissant muffin cake pie tart cookie
biscuit cracker brownie donut pastry pancake waffle crepe cereal oatmeal
porridge rice noodle pasta spaghetti macaroni lasagna pizza burger sandwich
wrap taco burrito quesadilla sushi ramen pho curry soup stew broth salad
coleslaw cheese butter cream yogurt milk egg omelet bacon sausage ham steak
beef pork chicken lamb veal meat fish salmon tuna cod trout meatball gravy
sauce ketchup mustard mayo salsa pepper salt sugar honey syrup jam jelly
vinegar oil flour dough batter spice herb basil mint parsley cilantro thyme
rosemary oregano ginger garlic onion shallot leek scallion potato tomato
carrot celery cucumber zucchini eggplant pumpkin squash pea bean lentil corn
mushroom spinach lettuce cabbage kale broccoli cauliflower radish turnip beet
asparagus artichoke avocado fruit apple banana grape melon watermelon
cantaloupe mango papaya pineapple peach plum apricot cherry berry strawberry
blueberry raspberry blackberry cranberry lemon lime grapefruit kiwi fig date
raisin coconut almond peanut walnut cashew pistachio hazelnut pecan chestnut
drink beverage water juice soda cola lemonade tea coffee espresso latte mocha
cappuccino cocoa beer wine whiskey vodka rum gin cocktail smoothie shake
clothing clothes outfit dress gown skirt blouse shirt tshirt top sweater
jumper cardigan hoodie jacket coat parka raincoat blazer suit vest tie scarf
shawl glove mitten hat cap beanie helmet hood sock stocking legging tight
pant trouser jean short belt buckle zipper collar sleeve cuff hem pocket
button uniform costume pajama robe apron bikini swimsuit underwear bra boot
shoe sneaker sandal slipper heel loafer lace sole jewelry necklace bracelet
ring earring pendant brooch watch sunglasses glasses umbrella cane nature
tree oak pine maple birch cedar willow palm bamboo bush shrub hedge flower
rose tulip daisy lily orchid sunflower daffodil violet poppy petal leaf stem
root branch twig bark trunk seed sprout grass weed moss fern vine ivy fruit
forest wood jungle rainforest grove orchard meadow field prairie plain valley
hill mountain peak summit cliff canyon cave ridge slope volcano glacier
desert dune oasis beach coast shore island peninsula bay gulf lagoon reef
ocean sea lake pond river stream creek brook waterfall spring swamp marsh
sky cloud sun moon star planet comet meteor rainbow horizon sunshine shadow
rain drizzle shower storm thunder lightning hail snow snowflake frost ice
icicle fog mist dew wind breeze gust tornado hurricane weather climate
temperature season person people man woman child kid baby infant toddler boy
girl teenager adult parent mother father mom dad brother sister sibling son
daughter grandmother grandfather grandma grandpa aunt uncle cousin nephew
niece wife husband spouse partner friend buddy neighbor stranger guest host
crowd family couple team group club member leader boss manager worker
employee employer colleague student pupil teacher professor tutor coach
principal doctor nurse surgeon dentist patient pharmacist vet lawyer judge
officer police detective guard soldier sailor pilot captain driver conductor
engineer mechanic plumber electrician carpenter builder architect designer
artist painter sculptor musician singer drummer guitarist pianist composer
dancer actor actress director producer writer author poet journalist editor
photographer model chef cook baker butcher waiter waitress barista bartender
cashier clerk vendor merchant farmer fisherman hunter gardener librarian
scientist researcher inventor astronaut explorer tourist traveler visitor
customer client buyer seller owner tenant landlord body head face forehead
eye eyebrow eyelash ear nose nostril cheek chin jaw mouth lip tooth tongue
throat neck shoulder chest waist hip back spine arm elbow wrist hand palm
finger thumb nail leg thigh knee shin ankle foot toe heel skin hair beard
mustache muscle bone joint blood heart lung liver kidney stomach brain nerve
school college university academy classroom class lesson course lecture exam
test quiz grade score homework assignment project essay report thesis degree
diploma certificate subject math science history geography physics chemistry
biology art music language english literature grammar word sentence paragraph
letter alphabet book novel story tale poem chapter page cover title author
library bookstore dictionary encyclopedia magazine newspaper article journal
diary notebook notepad paper note card envelope stamp pen pencil marker
crayon chalk eraser ruler scissors glue tape stapler clip folder file
document office building tower skyscraper hospital clinic pharmacy bank
market supermarket store shop mall boutique bakery cafe restaurant diner bar
pub hotel motel inn hostel museum gallery theater cinema stadium arena gym
pool court field park playground zoo aquarium circus carnival fair festival
church temple mosque cathedral chapel palace castle fort monument statue
fountain bridge tunnel road street avenue boulevard lane alley highway
freeway sidewalk crosswalk corner block intersection traffic signal sign
billboard station airport terminal port harbor dock pier platform track rail
railway subway metro bus taxi cab car truck van suv jeep trailer tractor
motorcycle scooter bicycle bike skateboard roller train tram ferry boat ship
yacht canoe kayak raft sailboat submarine airplane plane jet helicopter
rocket balloon parachute glider wheel tire engine motor brake pedal handle
seat saddle horn mirror bumper trunk hood windshield wiper headlight
gasoline fuel diesel job work career profession occupation business company
firm corporation industry factory plant workshop warehouse farm ranch mine
lab laboratory studio agency branch department division meeting conference
interview appointment schedule deadline salary wage income tax money cash
coin bill dollar cent price cost fee fare discount sale bargain receipt
invoice budget loan debt credit deposit savings investment profit loss trade
deal contract agreement sport game match tournament championship league race
marathon sprint relay jump throw catch pitch goal score point winner loser
champion medal trophy prize award ball football soccer basketball baseball
tennis volleyball golf hockey cricket rugby badminton bowling boxing
wrestling karate judo yoga pilates exercise workout fitness jogging hiking
camping fishing hunting climbing skiing snowboarding skating surfing
swimming diving sailing rowing cycling riding archery darts chess checkers
poker puzzle riddle toy doll puppet robot kite marble dice domino lego block
swing slide seesaw sandbox hobby craft knitting sewing embroidery quilting
pottery ceramics origami drawing sketch painting photography gardening
cooking baking reading writing singing dancing acting collecting stamp
travel trip journey voyage tour vacation adventure expedition safari cruise
flight ticket passport visa luggage map compass guide souvenir postcard
gift present ribbon bow box package parcel wrapper event party celebration
ceremony wedding funeral parade concert show performance opera ballet play
musical movie film video clip episode series season channel program news
broadcast podcast interview documentary cartoon animation comedy drama
thriller horror mystery romance fantasy fiction music song melody tune
rhythm beat tempo lyric verse chorus harmony note chord scale instrument
piano keyboard organ guitar violin viola cello bass harp flute clarinet
oboe bassoon saxophone trumpet trombone tuba horn drum cymbal tambourine
xylophone accordion harmonica banjo ukulele band orchestra choir audience
stage curtain spotlight microphone amplifier health sickness illness disease
cold flu fever cough headache stomachache toothache allergy infection injury
wound cut bruise burn sprain fracture pain ache medicine pill tablet capsule
syrup ointment bandage cast crutch wheelchair therapy surgery operation
checkup vaccine shot dose cure remedy recovery rest sleep nap dream
nightmare idea thought opinion belief fact truth lie rumor secret mystery
question answer problem solution reason cause effect result consequence
purpose goal aim target plan strategy method way manner approach habit
custom tradition culture religion faith hope wish desire dream fear worry
stress anxiety joy happiness sadness sorrow grief anger rage fury surprise
shock wonder awe pride shame guilt envy jealousy love hate trust doubt
courage bravery fear cowardice patience kindness cruelty honesty loyalty
friendship relationship marriage divorce argument quarrel fight conflict
war peace battle victory defeat attack defense weapon gun rifle pistol
bullet bomb missile sword knife dagger spear arrow bow shield armor thing
object item stuff material substance matter element metal iron steel
aluminum tin lead zinc nickel brass gold silver copper wood timber lumber
plank board log stick pole post beam plastic rubber glass crystal ceramic
porcelain clay mud dirt soil sand gravel pebble stone rock boulder brick
cement concrete asphalt tar paint dye ink fabric cloth textile cotton wool
silk linen leather suede velvet denim nylon polyester thread yarn fiber
paper cardboard foil wax candle soap detergent bleach chemical acid gas
oxygen hydrogen nitrogen carbon smoke steam vapor liquid fluid solid powder
dust ash flame fire spark ember heat warmth cold chill energy power
electricity current voltage magnet gravity force pressure speed velocity
distance length width height depth size shape form pattern design style
fashion trend look appearance beauty charm grace elegance color shade tint
hue tone brightness darkness light shadow reflection glow shine sparkle
glitter corner edge side surface top bottom middle center front rear end
beginning start finish part piece portion section segment slice chunk bit
crumb drop dot spot mark stain spot line stripe curve circle oval square
rectangle triangle diamond pentagon hexagon cube sphere cylinder cone
pyramid angle degree row column grid layer level stage step phase round
amount number quantity count total sum average percentage fraction half
quarter third double triple pair dozen couple few several many plenty lot
group set bunch batch stack pile heap load bundle cluster collection series
sequence order arrangement list menu catalog inventory record history past
present future moment instant while period era age century decade
generation anniversary date calendar deadline occasion chance opportunity
luck fortune fate destiny miracle magic trick joke prank humor fun
amusement entertainment pleasure delight comfort convenience luxury wealth
poverty hunger thirst appetite taste flavor smell scent aroma fragrance
perfume odor stink sound noise voice echo whisper shout scream cry laugh
giggle chuckle sigh breath gasp hiccup snore sneeze cough yawn silence
view scene scenery sight landscape seascape skyline panorama vista outlook
glimpse glance stare gaze wink blink nod shrug gesture signal motion
movement action activity behavior conduct attitude mood temper spirit soul
mind memory knowledge wisdom intelligence skill talent gift ability
capacity strength weakness advantage disadvantage benefit harm damage
danger risk hazard threat safety security protection shelter refuge escape
rescue aid help support assistance service favor duty responsibility task
chore errand mission assignment role position rank status title reputation
fame glory honor respect admiration praise compliment criticism blame
complaint apology excuse promise vow oath pledge offer proposal suggestion
advice recommendation warning alert notice announcement message news
information detail description explanation instruction direction guidance
rule law regulation policy principle standard criterion requirement
condition term clause exception permission approval consent refusal denial
ban prohibition limit boundary border frontier territory zone district
neighborhood suburb outskirts surroundings environment atmosphere climate
context situation circumstance case instance example sample specimen model
copy original version edition issue volume unit item entry element
component ingredient factor feature aspect quality property characteristic
trait attribute value worth merit virtue flaw defect fault error mistake
blunder slip accident incident occurrence happening phenomenon miracle""".split()

VERBS_REGULAR = """talk walk jump play look watch listen open close start
stop move turn pull push lift drop pick carry hold touch press squeeze wave
point reach stretch bend fold wrap tie untie pack unpack fill empty pour
spill mix stir shake roll slide glide float sink splash wash clean wipe
scrub polish dust sweep mow rake dig plant water pick harvest cook bake
boil fry roast grill steam toast chop slice dice peel grate mash whisk
knead season taste smell sniff lick chew swallow sip gulp munch nibble
order serve deliver share offer hand pass receive accept refuse reject
return borrow lend rent own belong collect gather sort arrange organize
stack pile store save waste spend earn pay charge owe count measure weigh
compare match fit suit belong attach connect join link separate divide
split remove delete erase add insert include exclude contain cover uncover
hide reveal show display present explain describe mention state announce
declare claim argue discuss debate agree disagree accept admit deny confess
promise warn remind inform notify report record note mark label sign
stamp print type copy scan mail post call text chat message email answer
reply ask request demand beg invite welcome greet visit stay remain wait
delay hurry rush walk march stroll wander roam travel journey arrive depart
enter exit cross pass follow chase escape avoid dodge approach retreat
climb crawl hop skip dance spin twist turn flip balance lean rest relax
work study learn practice train teach coach test check verify confirm
correct improve develop create design invent discover explore research
examine inspect observe notice spot detect identify recognize remember
forget imagine dream wish hope expect predict guess suppose assume believe
doubt trust suspect wonder consider decide choose select prefer plan
prepare attempt try manage succeed fail struggle effort focus concentrate
attend join participate compete race challenge defeat conquer surrender
protect defend guard attack invade destroy damage ruin wreck crash smash
crack break repair fix mend restore replace change exchange swap trade
shift adjust adapt modify convert transform cause affect influence impact
happen occur appear disappear vanish emerge exist survive live die fade
vanish remain continue last end finish complete achieve accomplish perform
act behave react respond treat handle deal cope manage control command
direct guide lead rule govern judge punish reward praise blame criticize
complain apologize thank congratulate celebrate enjoy like love adore
admire respect hate dislike fear dread worry bother annoy irritate upset
disturb scare frighten terrify shock surprise amaze astonish impress
entertain amuse bore tire exhaust rest refresh relax calm soothe comfort
encourage support help assist serve rescue save heal cure injure hurt harm
suffer ache bleed recover rest breathe inhale exhale cough sneeze yawn
snore whisper shout yell scream cry weep sob laugh giggle smile grin frown
blush stare gaze glance peek wink blink nod shrug gesture signal knock
tap pat stroke rub scratch pinch poke slap punch kick stomp trip stumble
slip fall tumble drown dive swim surf sail row paddle fish hunt camp hike
ski skate sled cycle pedal ride drive steer park brake accelerate reverse
tow haul ship transport load unload lift hoist lower raise drag haul
launch land fly soar glide hover flutter flap perch nest hatch migrate
bark meow moo neigh oink quack roar growl howl hiss buzz chirp tweet
bloom blossom sprout grow wilt wither decay rot spoil ripen freeze melt
thaw boil evaporate condense drip leak flood overflow drain soak absorb
dry burn scorch glow shine sparkle glitter flash flicker dim brighten
darken shade block reflect echo ring chime buzz beep honk whistle hum
strum drum play record perform rehearse compose conduct paint sketch draw
carve sculpt mold shape craft knit sew stitch weave embroider decorate
furnish renovate remodel build construct assemble install wire plumb
hammer nail screw drill saw cut trim clip shave file sand grind sharpen
blunt bend straighten twist coil wind unwind loop knot lace button zip
unzip fasten buckle strap click snap tick function operate run maintain
service upgrade download upload install delete browse search click scroll
type program code debug compile deploy backup restore print scan stream
film shoot edit crop zoom focus capture frame pose model style dress wear
fit tailor iron fold hang drape tuck layer accessorize shop buy purchase
sell market advertise promote brand launch stock supply demand import
export invest fund finance budget audit insure tax fine bill invoice
refund deposit withdraw transfer donate tip bribe gamble bet wager risk
venture found establish register license certify qualify graduate enroll
apply interview hire employ recruit promote demote retire resign quit
dismiss suspend train mentor supervise delegate assign schedule postpone
cancel confirm book reserve host attend chair moderate vote elect appoint
nominate campaign lobby protest march riot rebel revolt negotiate mediate
settle resolve compromise cooperate collaborate partner ally unite merge
acquire expand shrink downsize outsource relocate commute migrate settle
inhabit occupy vacate evict lease mortgage remodel landscape garden prune
fertilize spray pollute recycle conserve preserve restore sustain renew
generate produce manufacture process refine extract mine drill harvest
farm breed raise herd graze milk shear slaughter butcher package label
brand bottle can jar seal preserve pickle ferment brew distill age""".split()

VERBS_IRREGULAR = {
    # stem: (VBZ, VBG, VBD, VBN)
    "go": ("goes", "going", "went", "gone"),
    "see": ("sees", "seeing", "saw", "seen"),
    "say": ("says", "saying", "said", "said"),
    "get": ("gets", "getting", "got", "gotten"),
    "make": ("makes", "making", "made", "made"),
    "know": ("knows", "knowing", "knew", "known"),
    "think": ("thinks", "thinking", "thought", "thought"),
    "take": ("takes", "taking", "took", "taken"),
    "come": ("comes", "coming", "came", "come"),
    "give": ("gives", "giving", "gave", "given"),
    "find": ("finds", "finding", "found", "found"),
    "tell": ("tells", "telling", "told", "told"),
    "become": ("becomes", "becoming", "became", "become"),
    "leave": ("leaves", "leaving", "left", "left"),
    "feel": ("feels", "feeling", "felt", "felt"),
    "put": ("puts", "putting", "put", "put"),
    "bring": ("brings", "bringing", "brought", "brought"),
    "begin": ("begins", "beginning", "began", "begun"),
    "keep": ("keeps", "keeping", "kept", "kept"),
    "write": ("writes", "writing", "wrote", "written"),
    "stand": ("stands", "standing", "stood", "stood"),
    "hear": ("hears", "hearing", "heard", "heard"),
    "let": ("lets", "letting", "let", "let"),
    "mean": ("means", "meaning", "meant", "meant"),
    "set": ("sets", "setting", "set", "set"),
    "meet": ("meets", "meeting", "met", "met"),
    "pay": ("pays", "paying", "paid", "paid"),
    "sit": ("sits", "sitting", "sat", "sat"),
    "speak": ("speaks", "speaking", "spoke", "spoken"),
    "lie": ("lies", "lying", "lay", "lain"),
    "lead": ("leads", "leading", "led", "led"),
    "read": ("reads", "reading", "read", "read"),
    "grow": ("grows", "growing", "grew", "grown"),
    "lose": ("loses", "losing", "lost", "lost"),
    "fall": ("falls", "falling", "fell", "fallen"),
    "send": ("sends", "sending", "sent", "sent"),
    "build": ("builds", "building", "built", "built"),
    "understand": ("understands", "understanding", "understood", "understood"),
    "draw": ("draws", "drawing", "drew", "drawn"),
    "break": ("breaks", "breaking", "broke", "broken"),
    "spend": ("spends", "spending", "spent", "spent"),
    "cut": ("cuts", "cutting", "cut", "cut"),
    "rise": ("rises", "rising", "rose", "risen"),
    "drive": ("drives", "driving", "drove", "driven"),
    "buy": ("buys", "buying", "bought", "bought"),
    "wear": ("wears", "wearing", "wore", "worn"),
    "choose": ("chooses", "choosing", "chose", "chosen"),
    "eat": ("eats", "eating", "ate", "eaten"),
    "drink": ("drinks", "drinking", "drank", "drunk"),
    "sing": ("sings", "singing", "sang", "sung"),
    "swim": ("swims", "swimming", "swam", "swum"),
    "run": ("runs", "running", "ran", "run"),
    "fly": ("flies", "flying", "flew", "flown"),
    "throw": ("throws", "throwing", "threw", "thrown"),
    "catch": ("catches", "catching", "caught", "caught"),
    "teach": ("teaches", "teaching", "taught", "taught"),
    "sleep": ("sleeps", "sleeping", "slept", "slept"),
    "wake": ("wakes", "waking", "woke", "woken"),
    "win": ("wins", "winning", "won", "won"),
    "shoot": ("shoots", "shooting", "shot", "shot"),
    "hang": ("hangs", "hanging", "hung", "hung"),
    "shake": ("shakes", "shaking", "shook", "shaken"),
    "ride": ("rides", "riding", "rode", "ridden"),
    "hide": ("hides", "hiding", "hid", "hidden"),
    "steal": ("steals", "stealing", "stole", "stolen"),
    "freeze": ("freezes", "freezing", "froze", "frozen"),
    "blow": ("blows", "blowing", "blew", "blown"),
    "bite": ("bites", "biting", "bit", "bitten"),
    "swing": ("swings", "swinging", "swung", "swung"),
    "hit": ("hits", "hitting", "hit", "hit"),
    "hurt": ("hurts", "hurting", "hurt", "hurt"),
    "hold": ("holds", "holding", "held", "held"),
    "sell": ("sells", "selling", "sold", "sold"),
    "feed": ("feeds", "feeding", "fed", "fed"),
    "shine": ("shines", "shining", "shone", "shone"),
    "dig": ("digs", "digging", "dug", "dug"),
    "stick": ("sticks", "sticking", "stuck", "stuck"),
    "forget": ("forgets", "forgetting", "forgot", "forgotten"),
    "forgive": ("forgives", "forgiving", "forgave", "forgiven"),
}

ADJECTIVES = """big small large little tiny huge giant enormous massive vast
grand miniature narrow wide broad thick thin slim skinny fat plump chubby
tall short long brief high low deep shallow heavy lightweight soft hard firm
solid hollow tight loose smooth rough bumpy coarse fine sharp blunt dull
flat round curved straight crooked twisted bent wavy curly spiky fuzzy furry
fluffy silky sleek shiny glossy matte sparkly glittering gleaming bright dim
dark pale vivid colorful plain fancy simple ornate elegant graceful clumsy
awkward stylish trendy classic modern ancient old young new fresh stale
rotten ripe raw cooked baked fried grilled roasted toasted crispy crunchy
chewy tender juicy dry moist damp wet soggy soaked drenched dusty dirty
filthy messy tidy neat clean spotless pure polluted clear cloudy foggy misty
hazy sunny rainy snowy windy stormy calm peaceful quiet silent loud noisy
deafening gentle fierce wild tame savage brutal cruel kind friendly warm
cool cold icy freezing chilly frosty hot boiling scorching burning lukewarm
mild spicy bland salty sweet sour bitter tangy savory delicious tasty yummy
appetizing disgusting gross nasty awful terrible horrible dreadful lovely
wonderful marvelous fabulous fantastic amazing incredible astonishing
remarkable extraordinary ordinary common rare unique special typical usual
unusual strange weird odd curious peculiar mysterious familiar foreign
exotic local native wild domestic happy glad joyful cheerful merry jolly
delighted pleased content satisfied grateful thankful excited thrilled
eager enthusiastic keen proud confident hopeful optimistic sad unhappy
gloomy miserable depressed upset disappointed discouraged pessimistic
angry mad furious annoyed irritated frustrated grumpy cranky moody jealous
envious afraid scared frightened terrified anxious nervous worried tense
stressed shy timid bashful bold brave courageous daring fearless cautious
careful careless reckless lazy idle active lively energetic dynamic quick
fast rapid swift speedy slow sluggish steady busy free available occupied
crowded empty full packed stuffed vacant abandoned deserted inhabited
popular famous renowned celebrated unknown obscure anonymous important
significant essential crucial vital necessary optional useless useful
helpful handy practical convenient awkward difficult hard challenging
tough easy simple effortless complicated complex intricate basic advanced
elementary sophisticated primitive crude refined polished rich wealthy
prosperous poor broke needy expensive costly pricey cheap affordable
reasonable valuable precious worthless priceless generous stingy greedy
selfish selfless noble humble modest arrogant proud vain boastful honest
truthful sincere genuine fake false phony loyal faithful devoted reliable
dependable trustworthy responsible mature immature childish silly foolish
absurd ridiculous sensible wise clever smart intelligent brilliant genius
dumb stupid ignorant naive innocent guilty sneaky sly cunning crafty
gullible strong powerful mighty sturdy robust weak feeble frail fragile
delicate brittle tough durable flimsy healthy fit athletic muscular sick
ill unwell dizzy nauseous sore tired exhausted weary drowsy sleepy awake
alert attentive focused distracted absent hungry starving famished thirsty
parched stuffed satisfied beautiful pretty gorgeous stunning attractive
handsome cute adorable charming appealing plain homely ugly hideous
grotesque elegant glamorous radiant dazzling breathtaking picturesque
scenic quaint cozy comfortable snug homey welcoming inviting pleasant
agreeable enjoyable delightful fun amusing entertaining hilarious funny
comical witty humorous serious solemn grave earnest stern strict harsh
lenient gentle tender loving caring affectionate warm compassionate
sympathetic considerate thoughtful polite courteous respectful rude
impolite disrespectful insolent vulgar crude obnoxious annoying irritating
tiresome boring dull tedious monotonous repetitive interesting fascinating
intriguing captivating engaging gripping thrilling exciting exhilarating
true correct right accurate exact precise wrong incorrect false mistaken
faulty flawed perfect flawless ideal ultimate supreme superior inferior
mediocre average decent adequate sufficient insufficient scarce abundant
plentiful ample sparse meager bare naked nude dressed clothed covered
exposed hidden visible invisible apparent obvious evident subtle vague
ambiguous obscure transparent opaque translucent lucid murky early late
punctual prompt tardy recent current contemporary outdated obsolete
antique vintage eternal permanent temporary momentary fleeting lasting
endless infinite finite limited boundless immense urgent pressing critical
severe extreme intense moderate slight minor major primary secondary
main chief principal leading dominant subordinate equal unequal even
uneven balanced level flat steep gradual sudden abrupt immediate instant
gradual slow smooth jerky continuous constant steady intermittent
occasional frequent regular irregular random systematic orderly chaotic
organized disorganized structured loose formal informal casual official
unofficial legal illegal lawful criminal innocent creative imaginative
inventive original artistic musical poetic literary scientific technical
mathematical logical rational irrational emotional sentimental nostalgic
romantic dramatic theatrical spiritual religious sacred holy divine
worldly material physical mental psychological social cultural political
economic financial commercial industrial agricultural rural urban suburban
metropolitan cosmopolitan global international national regional domestic
public private personal individual collective communal mutual joint
single double triple multiple numerous countless various diverse assorted
mixed uniform identical similar alike different distinct separate unique
whole entire complete partial total absolute utter sheer mere actual real
genuine virtual artificial synthetic natural organic wooden metallic
plastic glass ceramic leather woolen cotton silken velvet furry feathery""".split()

GRADABLE = """big small large long short tall wide deep soft hard smooth
rough sharp bright dark warm cool cold hot sweet sour fast slow quick
strong weak rich poor cheap young old new fresh clean dirty happy sad
easy busy lazy noisy quiet brave calm wild tight loose thick thin fat
slim heavy light high low near far great fine nice cute wet dry""".split()

ADVERBS = """quickly slowly carefully carelessly quietly loudly softly
gently roughly smoothly easily hardly barely nearly closely directly
immediately suddenly gradually eventually finally recently previously
currently presently constantly continuously frequently occasionally
rarely seldom normally generally typically particularly especially
specifically exactly precisely approximately roughly clearly obviously
apparently evidently certainly definitely surely probably possibly
likely unlikely absolutely completely entirely totally fully partly
partially mostly mainly largely slightly somewhat rather fairly
extremely incredibly remarkably surprisingly amazingly honestly frankly
seriously truly actually literally basically essentially naturally
fortunately unfortunately sadly happily gladly proudly bravely calmly
angrily anxiously nervously eagerly patiently politely kindly warmly
coldly sharply brightly darkly heavily lightly deeply highly widely
strongly weakly firmly tightly loosely freely openly secretly privately
publicly officially formally casually properly correctly wrongly badly
poorly perfectly ideally successfully effectively efficiently safely
dangerously riskily wisely foolishly cleverly skillfully beautifully
elegantly gracefully awkwardly clumsily neatly tidily messily newly
freshly originally initially firstly secondly lastly together apart
forward backward upward downward inward outward abroad overseas
upstairs downstairs indoors outdoors overnight nowadays meanwhile
anyway anyhow otherwise however therefore thus hence moreover
furthermore nevertheless nonetheless besides indeed""".split()

EXTRA_NOUNS_AMBIG = {
    # Ambiguous stems that must read as nouns for template mining.
    "work": "NN", "uniform": "NN", "rug": "NN", "salad": "NN", "photo": "NN",
    "picture": "NN", "plate": "NN", "bowl": "NN", "home": "NN", "place": "NN",
    "trip": "NN", "beach": "NN", "park": "NN", "market": "NN", "garden": "NN",
    "dress": "NN", "jacket": "NN", "shirt": "NN", "coat": "NN", "scarf": "NN",
    "hat": "NN", "sweater": "NN", "cat": "NN", "dog": "NN", "bird": "NN",
    "dinner": "NN", "lunch": "NN", "breakfast": "NN", "noodles": "NNS",
    "ramen": "NN", "curry": "NN", "pancakes": "NNS", "dumplings": "NNS",
    "tacos": "NNS", "color": "NN", "colors": "NNS", "shade": "NN",
}

EXTRA_ADJ_OVERRIDES = {
    # Participial and other modifiers that the verb tables or noun lists would
    # otherwise claim first.
    "striped": "JJ", "floral": "JJ", "plain": "JJ", "light": "JJ",
    "roasted": "JJ", "grilled": "JJ", "fried": "JJ", "baked": "JJ",
    "toasted": "JJ", "steamed": "JJ", "homemade": "JJ", "creamy": "JJ",
    "blurry": "JJ", "kinda": "RB", "for": "IN",
}


def plural(noun):
    if noun.endswith(("s", "x", "z", "ch", "sh")):
        return noun + "es"
    if noun.endswith("y") and len(noun) > 1 and noun[-2] not in "aeiou":
        return noun[:-1] + "ies"
    if noun.endswith("f") and noun not in ("roof", "chef", "chief", "belief"):
        return noun[:-1] + "ves"
    if noun.endswith("fe"):
        return noun[:-2] + "ves"
    return noun + "s"


IRREGULAR_PLURALS = {
    "man": "men", "woman": "women", "child": "children", "person": "people",
    "foot": "feet", "tooth": "teeth", "goose": "geese", "mouse": "mice",
    "ox": "oxen", "sheep": "sheep", "deer": "deer", "fish": "fish",
    "leaf": "leaves", "life": "lives", "knife": "knives", "wife": "wives",
    "wolf": "wolves", "half": "halves", "shelf": "shelves", "loaf": "loaves",
    "calf": "calves", "thief": "thieves",
}

DOUBLING = {"stop", "drop", "plan", "chop", "chat", "pat", "tap", "rub",
            "hug", "jog", "shop", "grab", "clap", "skip", "hop", "mop",
            "wrap", "trim", "clip", "drag", "snap", "stir", "scrub", "grin",
            "nod", "pin", "slap", "strum", "drum", "ship", "sled", "pedal",
            "travel", "bet", "wag", "zip", "unzip", "step", "trip", "plug"}


def verb_forms(stem):
    if stem in DOUBLING and not stem.endswith("e"):
        dbl = stem + stem[-1]
        return (plural(stem), dbl + "ing", dbl + "ed", dbl + "ed")
    if stem.endswith("e") and not stem.endswith("ee"):
        return (stem + "s", stem[:-1] + "ing", stem + "d", stem + "d")
    if stem.endswith("y") and len(stem) > 1 and stem[-2] not in "aeiou":
        return (stem[:-1] + "ies", stem + "ing", stem[:-1] + "ied", stem[:-1] + "ied")
    return (plural(stem), stem + "ing", stem + "ed", stem + "ed")


def comparative(adj):
    if adj.endswith("e"):
        return adj + "r", adj + "st"
    if adj.endswith("y") and adj[-2] not in "aeiou":
        return adj[:-1] + "ier", adj[:-1] + "iest"
    if (len(adj) <= 4 and adj[-1] not in "aeiouwy" and adj[-2] in "aeiou"
            and (len(adj) < 3 or adj[-3] not in "aeiou")):
        return adj + adj[-1] + "er", adj + adj[-1] + "est"
    return adj + "er", adj + "est"


def main():
    entries = []
    seen = set()

    def put(token, tag):
        if token and token not in seen:
            seen.add(token)
            entries.append((token, tag))

    for tok, tag in FUNCTION_WORDS.items():
        put(tok, tag)
    for c in COLORS:
        put(c, "JJ")
    for p in PLACES:
        put(p, "NN")
    for tok, tag in EXTRA_NOUNS_AMBIG.items():
        put(tok, tag)
    for tok, tag in EXTRA_ADJ_OVERRIDES.items():
        put(tok, tag)
    for n in NOUNS:
        if not n.isascii():
            continue
        put(n, "NN")
        put(IRREGULAR_PLURALS.get(n, plural(n)), "NNS")
    for stem, (z, g, d, nf) in VERBS_IRREGULAR.items():
        put(stem, "VB")
        put(z, "VBZ")
        put(g, "VBG")
        put(d, "VBD")
        put(nf, "VBN")
    for stem in VERBS_REGULAR:
        z, g, d, nf = verb_forms(stem)
        put(stem, "VB")
        put(z, "VBZ")
        put(g, "VBG")
        put(d, "VBD")
        if nf != d:
            put(nf, "VBN")
    for a in ADJECTIVES:
        put(a, "JJ")
    for a in GRADABLE:
        cmp_, sup = comparative(a)
        put(cmp_, "JJR")
        put(sup, "JJS")
    for a in ADVERBS:
        put(a, "RB")

    for token, tag in entries:
        print(f"{token}\t{tag}")


if __name__ == "__main__":
    main()
