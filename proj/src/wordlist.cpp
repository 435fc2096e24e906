// Copyright 2026 The Genshin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "genshin/core.hpp"

#include <sstream>

namespace genshin::core {
namespace {

// Bundled common-word vocabulary for the word-level attacker and for
// synthetic dataset generation. Lowercase, sorted, one word per line.
constexpr const char* kCommonWords =
    "ability\nabout\nabsorb\nabstract\nabysmal\nacademy\naccelerate\n"
    "accept\nacceptable\naccompany\naccordion\naccount\naccountant\n"
    "accurate\naccuse\nache\nacorn\nacquaintance\nacre\nacrylic\nact\n"
    "actor\nactress\nadapter\naddition\naddress\nadequate\nadhesive\n"
    "admire\nadolescent\nadore\nadult\nadvance\nadventure\nadvice\n"
    "affluent\nafraid\nafter\nafternoon\nagain\nagainst\nagent\nagony\n"
    "agree\nagreement\naid\naim\nairbag\nairflow\nairplane\nairport\n"
    "aisle\nalarm\nalbum\nalert\nalgorithm\nall\nallergy\nalley\n"
    "alleyway\nalliance\nalligator\nally\nalmost\nalong\nalphabet\n"
    "alpine\nalso\nalternative\nalthough\naltitude\naluminum\nalumnus\n"
    "always\namateur\namazed\namazing\namber\nambulance\namerican\n"
    "among\namount\namplifier\nan\nanalyze\nancestor\nancestry\nanchor\n"
    "anchovy\nancient\nand\nangle\nangry\nanguish\nankle\nanniversary\n"
    "announce\nannoyed\nanother\nanswer\nant\nantenna\nanthem\nantique\n"
    "anxious\nany\napartment\nape\napologize\nappalling\napparatus\n"
    "appendix\napple\nappliance\napplication\nappointment\nappraise\n"
    "appreciate\napprentice\napproach\napproval\napproximate\napricot\n"
    "apron\naqueduct\narchitect\nare\narea\narena\nargue\nargument\n"
    "arid\narise\narm\narmchair\narmor\naroma\naround\narrange\narrive\n"
    "arrow\narson\nart\nartery\narticle\narticulate\nartist\nas\nascent\n"
    "ash\nasked\naspen\nassemble\nassembly\nassess\nasset\nassignment\n"
    "assist\nassumption\nasteroid\nastonished\nastronaut\nastute\nat\n"
    "athlete\natlas\natoll\natom\natrocious\nattack\nattempt\n"
    "attendance\nattic\nattitude\nattorney\nauction\naudience\nauditor\n"
    "aunt\nauthor\nautobiography\nautograph\nautumn\navalanche\navenue\n"
    "average\nawake\naway\nawesome\nawful\naxle\nazalea\nbaboon\nbaby\n"
    "back\nbackpack\nbacteria\nbad\nbag\nbaggage\nbake\nbaker\nbakery\n"
    "balcony\nball\nballad\nballoon\nballot\nbamboo\nbanana\nband\n"
    "bandage\nbang\nbanjo\nbank\nbanker\nbankrupt\nbanquet\nbaptism\n"
    "bar\nbarbecue\nbarber\nbargain\nbarge\nbark\nbarley\nbarn\n"
    "barnacle\nbarometer\nbarrel\nbasement\nbasil\nbasket\nbass\n"
    "bassoon\nbat\nbattery\nbattle\nbay\nbe\nbeach\nbeacon\nbeak\n"
    "beaker\nbeam\nbean\nbear\nbeat\nbecause\nbecome\nbedtime\nbee\n"
    "beef\nbeehive\nbeen\nbeetle\nbefore\nbegan\nbegin\nbeginner\n"
    "begonia\nbeige\nbeing\nbelief\nbell\nbelly\nbelt\nbench\nbend\n"
    "beneficial\nbent\nberry\nbest\nbestseller\nbetter\nbetween\nbib\n"
    "bicker\nbicycle\nbid\nbig\nbill\nbillboard\nbillion\nbinder\n"
    "binoculars\nbiography\nbiologist\nbirch\nbird\nbirthday\nbison\n"
    "bistro\nbite\nbitter\nbitterness\nbizarre\nblack\nblackboard\n"
    "blame\nbland\nblanket\nblast\nblaze\nbleach\nbleat\nblend\nblender\n"
    "blink\nblister\nblizzard\nblock\nblog\nblood\nbloom\nblossom\n"
    "blouse\nblue\nbluebell\nblueberry\nblueprint\nblunt\nblush\nboard\n"
    "boat\nbody\nboil\nboiling\nbold\nbolt\nbomb\nbond\nbone\nbonfire\n"
    "bonus\nbook\nbookcase\nbookmark\nbookshelf\nbookstore\nboom\nboot\n"
    "booth\nborder\nbored\nborrow\nboth\nbottle\nboulder\nboulevard\n"
    "boutique\nbow\nbowl\nbox\nbracelet\nbrain\nbrainstorm\nbrake\n"
    "bramble\nbranch\nbrass\nbrave\nbravery\nbrawl\nbray\nbread\n"
    "breakfast\nbreed\nbreeze\nbrick\nbride\nbridge\nbrief\nbrightness\n"
    "brilliant\nbring\nbrittle\nbroad\nbroadcast\nbroccoli\nbrochure\n"
    "broke\nbroken\nbroker\nbronze\nbrooch\nbrook\nbroom\nbrother\n"
    "brown\nbrowser\nbruise\nbrush\nbubble\nbucket\nbuckle\nbud\nbudget\n"
    "buffet\nbuild\nbuilder\nbuilding\nbulb\nbulldozer\nbullet\nbumper\n"
    "bundle\nbunk\nbuoy\nburger\nburglary\nburn\nburner\nburst\nbus\n"
    "bush\nbusiness\nbust\nbusy\nbut\nbutcher\nbutter\nbuttercup\n"
    "butterfly\nbutton\nbuy\nbuzz\nby\ncab\ncabbage\ncabin\ncabinet\n"
    "cable\ncactus\ncafe\ncafeteria\ncake\ncalcium\ncalculate\n"
    "calculation\ncalculator\ncalendar\ncalf\ncalled\ncalm\ncame\ncamel\n"
    "camera\ncampaign\ncampfire\ncamping\ncan\ncanal\ncandidate\ncandle\n"
    "candy\ncannon\ncanoe\ncanopy\ncanter\ncanvas\ncanyon\ncap\n"
    "capability\ncapital\ncapsule\ncaptain\ncaption\ncar\ncard\ncareer\n"
    "cargo\ncarnation\ncarnival\ncarol\ncarp\ncarpenter\ncarpet\n"
    "carriage\ncarrot\ncarry\ncart\ncarton\ncarve\ncase\ncash\ncashier\n"
    "cassette\ncast\ncastle\ncat\ncatalyst\ncatch\ncategory\ncatfish\n"
    "cathedral\ncaulk\ncause\ncaution\ncave\ncavern\ncedar\nceiling\n"
    "celebration\ncelery\ncell\ncello\ncement\ncent\ncentury\nceramic\n"
    "ceremony\ncertain\ncertificate\nchain\nchair\nchalk\nchamber\n"
    "championship\nchance\nchange\nchannel\nchant\nchapel\nchapter\n"
    "character\ncharcoal\ncharger\ncharity\nchart\nchase\nchat\n"
    "checkers\ncheckup\ncheek\ncheerful\ncheese\ncheetah\nchef\nchemist\n"
    "cherish\ncherry\nchess\nchest\nchestnut\nchew\nchick\nchicken\n"
    "chief\nchild\nchildren\nchill\nchilly\nchime\nchimney\nchimpanzee\n"
    "chin\nchip\nchipped\nchirp\nchocolate\nchoice\nchoir\nchoose\nchop\n"
    "chopstick\nchord\nchore\nchorus\nchromosome\nchronicle\n"
    "chrysanthemum\nchuckle\nchurch\nchurn\ncinema\ncinnamon\ncircuit\n"
    "circulation\ncircumference\ncircus\ncitizen\ncity\nclam\nclan\n"
    "clang\nclap\nclarify\nclarinet\nclass\nclassmate\nclassroom\n"
    "clatter\nclaw\nclay\nclean\nclearing\ncleat\nclerk\nclever\nclick\n"
    "cliff\nclimate\nclimax\nclimb\nclimber\nclimbing\nclinic\nclock\n"
    "close\ncloset\ncloth\ncloud\ncloudburst\nclover\nclub\nclue\n"
    "clutch\ncoach\ncoal\ncoarse\ncoast\ncoat\ncobra\ncocoa\ncoconut\n"
    "cod\ncode\ncog\ncoin\ncolander\ncold\ncollage\ncollar\ncolleague\n"
    "collect\ncollege\ncollide\ncologne\ncolor\ncolossal\ncolumn\ncomb\n"
    "combat\ncome\ncomedy\ncomet\ncommand\ncommence\ncomment\ncommerce\n"
    "commitment\ncommodity\ncommon\ncommunicate\ncommunity\ncommuter\n"
    "companion\ncompass\ncompassion\ncomplete\ncompliment\ncompose\n"
    "composer\ncompost\ncompound\ncomprehend\ncompress\ncompromise\n"
    "compute\ncomputer\nconcept\nconcern\nconcert\nconclude\nconclusion\n"
    "concrete\ncondense\nconductor\nconference\nconfident\nconflict\n"
    "confused\nconquest\nconsent\nconsequence\nconsider\nconsonant\n"
    "constitution\nconstruct\nconstruction\nconsulate\ncontainer\n"
    "contemplate\ncontemporary\ncontent\ncontinent\ncontinue\ncontract\n"
    "contribute\ncontrol\nconvention\nconverse\nconvince\ncook\ncooked\n"
    "cookie\ncool\ncoop\ncopper\ncopy\ncoral\ncork\ncorn\ncorner\n"
    "correct\ncorrespond\ncorridor\ncosmos\ncost\ncottage\ncotton\n"
    "couch\ncough\ncould\ncouncil\ncounter\ncountertop\ncountry\n"
    "countryside\ncounty\ncouple\ncoupon\ncourage\ncourier\ncourse\n"
    "court\ncourthouse\ncousin\ncow\ncowardice\ncrab\ncracked\ncrackle\n"
    "cradle\ncraft\ncrafty\ncram\ncrane\ncrankshaft\ncranky\ncrash\n"
    "crate\ncrater\ncrave\ncrawl\ncrayon\ncream\ncreate\ncredit\ncreek\n"
    "creep\ncrevasse\ncrib\ncricket\ncrime\ncriminal\ncrimson\n"
    "criticize\ncritique\ncrocodile\ncrooked\ncroon\ncrop\ncrosswalk\n"
    "crow\ncrown\ncrucial\ncruel\ncruise\ncrunch\ncrushed\ncrutch\ncry\n"
    "crystal\ncucumber\ncuff\nculture\ncunning\ncup\ncupboard\ncurator\n"
    "curb\ncure\ncurious\ncurrent\ncurriculum\ncursor\ncurtain\ncurved\n"
    "cushion\ncustom\ncut\ncutting\ncyan\ncyclone\ncymbal\ndad\n"
    "daffodil\ndahlia\ndaisy\ndam\ndamp\ndampen\ndancer\ndandelion\n"
    "danger\ndarkness\ndart\ndash\ndata\ndatabase\ndaughter\ndawdle\n"
    "dawn\nday\ndaybreak\ndaylight\ndays\ndaytime\ndeadline\ndeal\n"
    "debate\ndebt\ndecade\ndecanter\ndecay\ndecent\ndecision\ndeck\n"
    "declare\ndecoration\ndedication\ndeep\ndeer\ndefeat\ndefective\n"
    "defend\ndefense\ndefine\ndefinition\ndeflate\ndegree\ndelay\n"
    "delete\ndeli\ndeliberate\ndelicate\ndelighted\ndeliver\ndelivery\n"
    "delta\ndeluge\ndemocracy\ndemonstration\ndenim\ndense\ndented\n"
    "dentist\ndeodorant\ndepart\ndeposit\ndepth\ndescendant\ndescent\n"
    "describe\ndescription\ndesert\ndesign\ndesire\ndesk\ndespair\n"
    "destination\ndestiny\ndestitute\ndetect\ndetective\ndetention\n"
    "detergent\ndevelopment\ndevice\ndevotion\ndevour\ndew\ndewdrop\n"
    "diagnosis\ndiagram\ndialogue\ndiameter\ndiamond\ndiaper\ndiary\n"
    "dice\ndictate\ndictionary\ndid\ndie\ndiesel\ndiet\ndifferent\n"
    "digestion\ndime\ndine\ndiner\ndinner\ndiploma\ndirect\ndirector\n"
    "dirt\ndirty\ndisagree\ndisappointed\ndisc\ndiscount\ndiscourage\n"
    "discover\ndiscuss\ndisease\ndish\ndishonest\ndishwasher\n"
    "disinfectant\ndisk\ndislike\ndisplay\ndispute\ndissertation\n"
    "dissolve\ndistant\ndistress\ndistrict\nditch\nditty\ndive\n"
    "dividend\ndiving\ndivision\ndo\ndock\ndoctor\ndoctorate\ndocument\n"
    "does\ndog\ndoll\ndollar\ndolphin\ndomestic\ndomino\ndonate\n"
    "donation\ndone\ndonkey\ndoor\ndormitory\ndose\ndoubtful\ndough\n"
    "dove\ndown\ndownload\ndownpour\ndoze\ndozen\ndraft\ndrag\n"
    "dragonfly\ndrain\ndrama\ndrape\ndraw\ndrawer\ndread\ndreadful\n"
    "dream\ndrench\ndrenched\ndress\ndresser\ndribble\ndrift\ndriftwood\n"
    "drill\ndrink\ndrip\ndrive\ndriver\ndrizzle\ndrone\ndrop\ndrought\n"
    "drowsy\ndrum\ndry\ndryer\ndrywall\nduck\nduel\ndull\ndumb\ndune\n"
    "durable\nduring\ndusk\ndust\nduster\ndustpan\nduty\ndye\ndynasty\n"
    "each\neager\neagle\near\nearache\nearbud\nearly\nearmuff\nearn\n"
    "earphone\nearring\neasel\neat\necho\neclipse\neconomy\necosystem\n"
    "eddy\nedit\neditor\neducation\neel\neffect\neffort\negg\neight\n"
    "eighty\nelaborate\nelbow\nelder\nelection\nelectrician\nelectrode\n"
    "electron\nelement\nelephant\nelevation\nelevator\neleven\nelk\nelm\n"
    "email\nembassy\nember\nemerald\nempathy\nemphasize\nempire\nempty\n"
    "encourage\nencyclopedia\nend\nendeavor\nendure\nenemy\nenergetic\n"
    "energy\nengine\nengineer\nenjoy\nenormous\nenough\nenroll\n"
    "enrollment\nenterprise\nentrance\nenvelope\nenvious\nenvy\nenzyme\n"
    "epilogue\nepoch\nequality\nequation\nequator\nequip\nequipment\n"
    "era\neraser\nerrand\nescalator\nescape\nescort\nessay\nessential\n"
    "estate\nestimate\nestuary\nevaluate\nevaporate\neven\nevening\n"
    "ever\nevergreen\nevery\nevidence\nevolution\nexact\nexam\nexamine\n"
    "example\nexcavator\nexcellent\nexceptional\nexcerpt\nexchange\n"
    "excited\nexecutive\nexercise\nexist\nexit\nexpand\nexpedition\n"
    "expense\nexperience\nexperiment\nexpert\nexpertise\nexplain\n"
    "explanation\nexplore\nexplosion\nextraordinary\nextravagant\neye\n"
    "eyebrow\neyelash\neyelid\neyes\nfabric\nfabulous\nface\nfact\n"
    "factory\nfade\nfaded\nfaint\nfair\nfaithful\nfake\nfalcon\nfall\n"
    "false\nfamily\nfantastic\nfantasy\nfar\nfare\nfarewell\nfarm\n"
    "farmer\nfast\nfat\nfate\nfather\nfaucet\nfear\nfeast\nfeather\nfee\n"
    "feeble\nfeed\nfeel\nfelt\nfence\nfencepost\nfender\nfern\nferry\n"
    "fertilizer\nfestival\nfetch\nfeud\nfever\nfew\nfiance\nfiction\n"
    "field\nfifty\nfig\nfight\nfigurine\nfile\nfill\nfilm\nfilthy\n"
    "finch\nfind\nfine\nfinger\nfinish\nfir\nfire\nfirefighter\nfirefly\n"
    "fireplace\nfirewood\nfirm\nfirst\nfish\nfisherman\nfishing\n"
    "fistfight\nfitness\nfive\nfix\nfixture\nfjord\nflag\nflame\n"
    "flamingo\nflash\nflashlight\nflask\nflat\nflatter\nflavor\n"
    "flawless\nflee\nflexible\nflicker\nflimsy\nfloat\nflock\nflood\n"
    "floor\nflorist\nflounder\nflour\nflourish\nflow\nflower\nflu\n"
    "flute\nfly\nflyer\nfoam\nfog\nfoghorn\nfold\nfolder\nfollow\nfood\n"
    "foolish\nfoot\nfoothill\nfootnote\nfootprint\nfootstep\nfor\n"
    "forceful\nforecast\nforehead\nforeign\nforest\nforge\nforget\n"
    "forgive\nfork\nforklift\nform\nformation\nformer\nformula\nfort\n"
    "fortress\nfortune\nforty\nforum\nfossil\nfoul\nfound\nfoundation\n"
    "fountain\nfour\nfox\nfraction\nfragile\nfrail\nfraud\nfrayed\n"
    "freedom\nfreeway\nfreeze\nfreezer\nfreezing\nfreight\nfresco\n"
    "fresh\nfreshman\nfridge\nfriend\nfriendly\nfright\nfrigid\nfrog\n"
    "from\nfrost\nfrostbite\nfroth\nfrown\nfrugal\nfrustrated\nfry\n"
    "fuchsia\nfuel\nfuneral\nfunnel\nfurious\nfurnace\nfurnish\n"
    "furniture\nfurrow\nfury\nfuture\ngadget\ngain\ngait\ngala\ngalaxy\n"
    "gale\ngallery\ngalley\ngallon\ngallop\ngaloshes\ngame\ngangway\n"
    "gape\ngarage\ngarden\ngardenia\ngarlic\ngasoline\ngate\ngather\n"
    "gathering\ngawk\ngaze\ngear\ngecko\ngem\ngene\ngeneral\ngenerous\n"
    "genius\ngentle\ngenuine\ngeography\ngeranium\ngerm\nget\ngeyser\n"
    "giant\ngift\ngiggle\nginger\ngiraffe\ngive\ngiven\nglacier\nglance\n"
    "glare\nglass\nglaze\ngleam\nglide\nglider\nglimmer\nglimpse\n"
    "glitter\nglobal\nglobe\ngloomy\nglossary\nglossy\nglove\nglow\n"
    "glue\ngluttony\ngo\ngoal\ngoat\ngobble\ngoblet\ngod\ngoing\ngold\n"
    "good\ngoods\ngoose\ngorge\ngorilla\ngossip\ngot\ngovern\n"
    "government\ngown\ngrab\ngrade\ngradual\ngraduate\ngraduation\n"
    "graffiti\ngrain\ngram\ngrammar\ngrand\ngranddaughter\ngrandfather\n"
    "grandmother\ngrandparent\ngrandson\ngranite\ngrape\ngraph\ngrasp\n"
    "grass\ngrasshopper\ngrate\ngrateful\ngrater\ngravel\ngray\ngreat\n"
    "greed\ngreen\ngreet\ngrenade\ngrief\ngrill\ngrimace\ngrin\ngroan\n"
    "grocery\ngroom\ngroup\ngrove\ngrow\ngrowl\ngrownup\ngrudge\ngrumpy\n"
    "guarantee\nguard\nguest\nguide\nguitar\ngulf\ngullible\ngulp\ngush\n"
    "gust\ngutter\ngymnasium\nhabit\nhabitat\nhad\nhaddock\nhail\nhair\n"
    "half\nhalftime\nhalibut\nhallway\nhalt\nhamlet\nhammer\nhammock\n"
    "hamper\nhamster\nhand\nhandle\nhanger\nhappy\nharbor\nhard\n"
    "hardcover\nhardware\nharmful\nharmonica\nharmony\nharp\nharsh\n"
    "harvest\nhas\nhat\nhatch\nhate\nhaul\nhave\nhawk\nhay\nhazard\n"
    "haze\nhazel\nhe\nhead\nheadache\nheading\nheadlight\nheadphone\n"
    "health\nhear\nheart\nheat\nheavy\nhedge\nheel\nheight\nhelicopter\n"
    "helmet\nhelp\nhelpful\nhem\nhemisphere\nhen\nher\nherb\nhere\n"
    "heritage\nheroism\nheron\nherring\nhibiscus\nhigh\nhighway\nhike\n"
    "hill\nhim\nhimself\nhinge\nhint\nhip\nhis\nhiss\nhistory\nhobble\n"
    "hold\nholiday\nhollow\nholly\nhome\nhomework\nhonest\nhoney\nhonor\n"
    "hood\nhoop\nhop\nhopeful\nhopeless\nhorizon\nhorn\nhornet\n"
    "horrible\nhorror\nhorse\nhose\nhospital\nhost\nhostel\nhostess\n"
    "hostile\nhot\nhotel\nhour\nhouse\nhousehold\nhow\nhowever\nhowl\n"
    "hue\nhuge\nhull\nhum\nhumble\nhumid\nhumidity\nhumility\nhundred\n"
    "hunter\nhunting\nhurricane\nhurry\nhusband\nhush\nhut\nhydrangea\n"
    "hydrant\nhymn\nhypothesis\nice\niceberg\nicicle\nicon\nicy\nidea\n"
    "identify\nidle\nif\nignorant\niguana\nillegal\nillness\n"
    "illustration\nimage\nimagination\nimmaculate\nimmense\nimpatient\n"
    "imperfect\nimplement\nimportant\nin\ninaccurate\ninch\nincome\n"
    "incorrect\nincredible\nindex\nindigo\nindustry\ninfant\ninfection\n"
    "inferior\ninflate\ningredient\ninheritance\ninitial\ninitiate\n"
    "inlet\ninn\ninning\ninspect\ninstance\ninstant\ninstrument\n"
    "insulation\ninsult\ninsurance\nintelligence\nintelligent\n"
    "intention\ninterest\nintern\ninternational\ninternet\ninterpret\n"
    "intersection\ninto\nintroduction\ninvalid\ninvasion\ninventor\n"
    "investigate\ninvestment\ninvoice\niris\niron\nirregular\n"
    "irrigation\nirritated\nis\nisland\nit\nitch\nitem\nitinerary\nits\n"
    "itself\nivory\nivy\njacket\njackhammer\njade\njail\njam\njanitor\n"
    "jar\njasmine\njaw\njealous\njeans\njeep\njelly\njellyfish\njersey\n"
    "jet\njetty\njewel\njeweler\njingle\njob\njog\njogging\njoke\njolly\n"
    "jot\njournal\njournalist\njourney\njoyful\njudge\njudgment\njump\n"
    "junction\njungle\njunior\njury\njust\njustice\njuvenile\nkayak\n"
    "keel\nkeep\nkeepsake\nkeg\nkelp\nketchup\nkettle\nkeyboard\nkid\n"
    "kiln\nkilogram\nkilometer\nkin\nkind\nkindergarten\nkindling\n"
    "kindness\nkingdom\nkitchen\nkite\nkiwi\nknee\nkneel\nknew\nknife\n"
    "knob\nknock\nknow\nknowledge\nknuckle\nlabel\nlaboratory\nlace\n"
    "lacquer\nladder\nladle\nlagoon\nlake\nlamp\nlamplight\nlamppost\n"
    "land\nlandmark\nlandscape\nlane\nlantern\nlap\nlaptop\nlarge\nlast\n"
    "latch\nlate\nlater\nlatitude\nlatter\nlaugh\nlaunch\nlaundry\n"
    "lavender\nlavish\nlaw\nlawful\nlawn\nlawyer\nlazy\nlead\nleaf\n"
    "lean\nlearn\nlease\nleast\nleather\nleave\nlecture\nleft\nleg\n"
    "legacy\nlegal\nlegend\nlegitimate\nlemon\nlend\nlength\nlenient\n"
    "lens\nleopard\nless\nlesson\nlet\nletter\nlettuce\nlevee\nlevel\n"
    "lever\nliberty\nlibrarian\nlibrary\nlick\nlid\nlie\nlife\nlift\n"
    "light\nlighthouse\nlightning\nlike\nlilac\nlily\nlime\nlimp\n"
    "lineage\nlinen\nlinger\nlink\nlinoleum\nlion\nlip\nlipstick\n"
    "liquid\nlist\nlisten\nliter\nlittle\nlive\nlizard\nload\nloan\n"
    "lobby\nlobster\nlocal\nlocate\nlock\nlocker\nlocomotive\nlodge\n"
    "logger\nlonely\nlong\nlongitude\nlook\nlooked\nloose\nlose\nloss\n"
    "lotion\nlotus\nloud\nlounge\nlove\nlow\nloyal\nloyalty\nluck\n"
    "luggage\nlukewarm\nlullaby\nlumber\nlumberjack\nlunch\nlung\nlurk\n"
    "lust\nluxurious\nlyric\nmacaw\nmachine\nmachinery\nmackerel\nmade\n"
    "magazine\nmagenta\nmagic\nmagnet\nmagnificent\nmagnolia\nmailbox\n"
    "main\nmajor\nmake\nmakeup\nmalice\nmall\nman\nmanage\nmanager\n"
    "mandolin\nmango\nmanhole\nmansion\nmanure\nmanuscript\nmany\nmap\n"
    "maple\nmarathon\nmarble\nmarch\nmargin\nmarigold\nmarina\nmariner\n"
    "marker\nmarket\nmarlin\nmaroon\nmarsh\nmarvelous\nmascara\nmason\n"
    "massive\nmast\nmaster\nmat\nmatch\nmath\nmatte\nmatter\nmattress\n"
    "may\nmayor\nme\nmeadow\nmeal\nmeaningful\nmeans\nmeasurement\nmeat\n"
    "mechanic\nmedal\nmedicine\nmediocre\nmeditate\nmeeting\nmelody\n"
    "melon\nmelt\nmembers\nmemento\nmemo\nmemorize\nmemory\nmen\nmend\n"
    "mention\nmenu\nmeow\nmerchandise\nmerchant\nmercy\nmerry\nmessage\n"
    "messy\nmetabolism\nmetal\nmeteor\nmeter\nmethod\nmetro\nmicrophone\n"
    "microscope\nmidday\nmidnight\nmight\nmighty\nmigration\nmild\nmile\n"
    "milk\nmillennium\nmillion\nmince\nmind\nminer\nmineral\nminiature\n"
    "minnow\nminor\nmint\nminute\nmirror\nmiserable\nmiserly\nmisery\n"
    "miss\nmissile\nmission\nmist\nmitt\nmitten\nmix\nmixture\nmoan\n"
    "moat\nmock\nmodern\nmodest\nmoist\nmoisten\nmold\nmolecule\nmom\n"
    "moment\nmonarchy\nmoney\nmonitor\nmonkey\nmonsoon\nmonth\nmonument\n"
    "moo\nmoon\nmoonlight\nmoose\nmop\nmoped\nmore\nmorning\nmortar\n"
    "mortgage\nmosaic\nmosque\nmosquito\nmoss\nmost\nmotel\nmoth\n"
    "mother\nmotive\nmotor\nmotorcycle\nmountain\nmouse\nmouth\nmuch\n"
    "mud\nmug\nmuggy\nmule\nmultiplication\nmunch\nmural\nmurmur\n"
    "muscle\nmuseum\nmusic\nmusician\nmust\nmustard\nmutter\nmy\n"
    "mystery\nmyth\nnail\nnaive\nnap\nnapkin\nnarrate\nnarrator\nnarrow\n"
    "nation\nnational\nnative\nnature\nnavigator\nnavy\nneat\nneck\n"
    "necklace\nneed\nneedle\nnegotiate\nneigh\nneighbor\nneighborhood\n"
    "neon\nnephew\nnerve\nnervous\nnest\nnet\nnettle\nnetwork\nneutron\n"
    "never\nnew\nnewspaper\nnext\nnibble\nnickel\nniece\nnight\n"
    "nightfall\nnightmare\nnighttime\nnine\nninety\nno\nnod\nnoise\n"
    "noisy\nnoodle\nnoon\nnormal\nnose\nnostril\nnot\nnote\nnotebook\n"
    "nothing\nnotice\nnotion\nnourish\nnovel\nnovelist\nnovice\nnow\n"
    "nucleus\nnumber\nnurse\nnursery\nnutrition\noak\noar\noasis\noat\n"
    "oath\nobject\nobjective\nobligation\noboe\nobservation\nobserve\n"
    "occupation\nocean\noctopus\nodd\nof\noff\noffend\noffense\noffer\n"
    "offering\nofficer\noften\noil\noink\nointment\nold\nolive\non\n"
    "once\none\nonion\nonly\nopal\nopen\nopera\noperate\noperation\n"
    "opinion\noppose\noption\nopulent\nor\norange\norbit\norchard\n"
    "orchestra\norchid\norder\nordinary\nore\norgan\norganism\norganize\n"
    "ornament\nostrich\nother\nothers\nounce\nour\nout\noutcome\noutlet\n"
    "outrage\noutstanding\noven\nover\noverdue\noversee\novertake\n"
    "overtime\nowl\nown\noyster\npace\npacifier\npack\npackage\npaddle\n"
    "paddling\npaddock\npage\npain\npaint\npaintbrush\npainter\npair\n"
    "palace\npalette\npalm\npamphlet\npan\npanic\npansy\npantry\npants\n"
    "paper\npaperback\nparade\nparagraph\nparamedic\nparaphrase\n"
    "parasite\nparcel\nparch\nparent\npark\nparrot\npart\nparticular\n"
    "partner\nparty\npass\npassage\npassport\npassword\npast\npasta\n"
    "paste\npastel\npasture\npatch\npath\npatient\npatio\npause\npay\n"
    "payment\npea\npeace\npeach\npeacock\npeak\npear\npearl\npebble\n"
    "peculiar\npedal\npedestrian\npedigree\npeek\npeel\npeeler\npelican\n"
    "pen\npenalty\npencil\npendant\npenguin\npeninsula\npenny\npension\n"
    "peony\npeople\npepper\nper\nperceive\nperch\nperfect\nperfume\n"
    "perimeter\nperiod\nperish\npermission\npersist\nperspective\n"
    "persuade\npetal\npetite\npetrol\npetunia\npharmacist\npharmacy\n"
    "phase\nphotograph\nphotographer\nphotosynthesis\nphysical\n"
    "physicist\npiano\npick\npicnic\npicture\npie\npiece\npier\npig\n"
    "pigeon\npigment\npike\npilgrimage\npill\npillar\npillow\npilot\n"
    "pin\npine\npineapple\npinecone\npink\npint\npipe\npistol\npiston\n"
    "pitch\npitcher\npity\npizza\npizzeria\nplace\nplain\nplan\nplanet\n"
    "plank\nplankton\nplaster\nplate\nplateau\nplatform\nplatter\nplay\n"
    "player\nplayground\nplaylist\nplaypen\nplaza\npleased\npledge\n"
    "plenty\npliers\nplod\nplot\nplow\nplug\nplum\nplumage\nplumber\n"
    "pocket\npod\npoem\npoet\npoint\npointed\npolice\npolicy\npolish\n"
    "polite\npollination\nponcho\npond\nponder\npool\npoor\npop\npoppy\n"
    "population\nporcelain\nporch\npork\nport\nporthole\nportion\n"
    "portrait\npossession\npossibility\npossible\npostage\npostcard\n"
    "poster\npostman\npostpone\npot\npotato\npotent\npottery\npouch\n"
    "pound\npour\npout\npower\npowerful\npractice\nprairie\npraise\n"
    "precious\nprecise\npredator\npreface\nprefer\nprepare\nprequel\n"
    "present\npresident\npress\nprevious\nprey\nprice\npride\nprimary\n"
    "primer\nprincipal\nprint\nprinter\nprism\nprison\npristine\n"
    "privilege\nprize\nprobability\nproblem\nprocedure\nproceed\n"
    "process\nprocessor\nproclaim\nproduct\nprofession\nprofessional\n"
    "professor\nprofile\nprofit\nprogram\nprogress\nproject\nprojector\n"
    "prologue\npromise\nprompt\npronounce\nproof\npropeller\nproperty\n"
    "prosperous\nprotection\nprotein\nprotest\nproton\nprotractor\n"
    "proud\nprovide\nprovince\nprowl\npub\npublic\npublish\npudding\n"
    "puddle\npull\npulley\npump\npunctual\npunish\npupil\npuppet\n"
    "purchase\npure\npurple\npurpose\npurr\npurse\npursue\npush\nput\n"
    "putty\npuzzle\npuzzled\npython\nquack\nquantity\nquarrel\nquart\n"
    "quarter\nquartz\nquay\nquestion\nquick\nquiet\nquilt\nquiz\n"
    "quotation\nquote\nrabbit\nracing\nrack\nracket\nradiator\nradio\n"
    "radius\nraft\nrag\nrage\nragged\nrail\nrain\nrainbow\nraincoat\n"
    "raindrop\nrainfall\nrainstorm\nrally\nrancher\nranger\nrank\nrapid\n"
    "rapids\nrare\nrash\nraspberry\nrat\nrather\nrattle\nraven\nravine\n"
    "raw\nray\nrazor\nreach\nreaction\nread\nreality\nrealtor\nreason\n"
    "rebellion\nrecall\nreceipt\nreceive\nrecent\nrecess\nrecipe\n"
    "recital\nrecite\nreckon\nrecognize\nrecommendation\nrecord\n"
    "recovery\nrecruit\nred\nreed\nreef\nreferee\nreflect\nreflection\n"
    "refuge\nrefund\nrefuse\nregion\nregister\nregret\nregular\n"
    "regulate\nregulation\nrehearse\nreindeer\nreject\nrelative\n"
    "reluctant\nremain\nremark\nremarkable\nremedy\nremember\nrent\n"
    "repair\nrepeat\nreply\nreport\nreporter\nrepublic\nrescue\n"
    "researcher\nresentment\nreservation\nreservoir\nresident\n"
    "resolution\nresort\nrespect\nrespiration\nresponse\nresponsibility\n"
    "rest\nrestaurant\nresult\nresume\nretain\nretreat\nreturn\nreunion\n"
    "reverse\nreview\nrevise\nrevolution\nreward\nrhododendron\nrhyme\n"
    "rhythm\nrib\nribbon\nrice\nrich\nrickshaw\nriddle\nridge\nridicule\n"
    "rifle\nrigging\nright\nrigid\nring\nrinse\nriot\nripe\nripped\n"
    "ripple\nrise\nrisk\nritual\nriver\nriverbank\nrivet\nroad\nroam\n"
    "roar\nroast\nrobbery\nrobin\nrobot\nrobust\nrock\nrocket\nroll\n"
    "rolling\nromance\nroof\nrookie\nroom\nroommate\nroost\nrooster\n"
    "root\nrope\nrose\nrot\nrotten\nrough\nround\nroundabout\nrouse\n"
    "routine\nrow\nrowing\nruby\nrudder\nrude\nrug\nrule\nruler\nrumble\n"
    "rumor\nrun\nrunway\nrush\nrust\nsack\nsacrifice\nsad\nsafari\n"
    "safety\nsaga\nsage\nsaid\nsail\nsailing\nsailor\nsalad\nsalary\n"
    "sale\nsalesman\nsalmon\nsalt\nsalty\nsame\nsample\nsand\nsandal\n"
    "sandbox\nsandwich\nsap\nsapling\nsapphire\nsardine\nsatchel\n"
    "satellite\nsatisfactory\nsatisfied\nsaturate\nsauce\nsaucer\nsaute\n"
    "save\nsavings\nsaw\nsawmill\nsaxophone\nsay\nscaffold\nscalding\n"
    "scale\nscalp\nscanner\nscar\nscarecrow\nscared\nscarf\nscarlet\n"
    "scene\nscenery\nscepter\nschedule\nscholarship\nschool\nscience\n"
    "scientist\nscold\nscooter\nscorching\nscore\nscoreboard\nscorpion\n"
    "scowl\nscrape\nscratched\nscream\nscreen\nscrew\nscribble\nscript\n"
    "scroll\nscrub\nscuffle\nsculpt\nsculpture\nsea\nseagull\nseal\n"
    "sealant\nsearch\nseashell\nseason\nseatbelt\nseaweed\nsecond\n"
    "secondary\nsecret\nsecretary\nsection\nsecurity\nsee\nseed\n"
    "seedling\nseesaw\nsegment\nselect\nselfish\nsell\nsemester\n"
    "seminar\nsend\nsenior\nsense\nsentence\nsequel\nserenade\nserenity\n"
    "serve\nserver\nservice\nset\nsetting\nseven\nseventy\nseveral\n"
    "sextant\nshabby\nshack\nshade\nshadow\nshake\nshallow\nshampoo\n"
    "shape\nshare\nshark\nsharp\nshattered\nshe\nsheep\nsheet\nshelf\n"
    "shelter\nshepherd\nsheriff\nshield\nshimmer\nshin\nshine\nshingle\n"
    "shiny\nship\nshipment\nshirt\nshocked\nshoe\nshoot\nshop\nshore\n"
    "short\nshorts\nshould\nshoulder\nshout\nshovel\nshower\nshrewd\n"
    "shriek\nshrimp\nshrine\nshrink\nshrub\nshuffle\nshut\nshuttle\nshy\n"
    "sibling\nsickness\nside\nsidewalk\nsiege\nsieve\nsigh\nsign\n"
    "signal\nsignature\nsignificant\nsilence\nsilent\nsilk\nsilly\nsilo\n"
    "silver\nsimmer\nsince\nsincere\nsing\nsinger\nsink\nsip\nsister\n"
    "sit\nsix\nsixty\nskate\nskateboard\nsketch\nsketchbook\nskewer\n"
    "ski\nskid\nskill\nskin\nskip\nskirt\nskull\nsky\nskyline\n"
    "skyscraper\nsled\nsleep\nsleepy\nsleet\nsleeve\nsleigh\nslender\n"
    "slice\nslide\nslim\nslip\nslipper\nslope\nsloth\nslow\nslug\n"
    "sluggish\nslumber\nslurp\nsly\nsmall\nsmart\nsmashed\nsmell\nsmile\n"
    "smirk\nsmoke\nsmooth\nsnack\nsnail\nsnake\nsnap\nsnapdragon\n"
    "snapshot\nsnarl\nsneak\nsneaker\nsneeze\nsnicker\nsnooze\nsnore\n"
    "snow\nsnowboard\nsnowflake\nso\nsoak\nsoap\nsoar\nsob\nsocial\n"
    "sock\nsocket\nsofa\nsoft\nsoftware\nsoggy\nsoil\nsoldier\nsole\n"
    "solid\nsolution\nsome\nsomething\nson\nsong\nsoot\nsophomore\n"
    "sorrow\nsort\nsound\nsoup\nsour\nsouvenir\nspade\nspark\nsparkle\n"
    "sparrow\nspatula\nspeak\nspeaker\nspear\nspecial\nspecies\n"
    "specific\nspecimen\nspeedy\nspelling\nspend\nspice\nspicy\nspider\n"
    "spin\nspinach\nspine\nspite\nsplash\nsplendid\nsplit\nsponge\n"
    "spoon\nspot\nspotless\nspotlight\nspouse\nspray\nspreadsheet\n"
    "spring\nsprinkle\nsprint\nsprocket\nsprout\nspruce\nsquabble\n"
    "square\nsqueeze\nsquid\nsquint\nsquirrel\nstable\nstadium\nstage\n"
    "stagger\nstair\nstaircase\nstale\nstalk\nstall\nstamina\nstamp\n"
    "stand\nstandard\nstaple\nstar\nstarboard\nstare\nstarfish\n"
    "starlight\nstart\nstarve\nstate\nstatement\nstates\nstation\n"
    "statue\nstay\nsteady\nsteak\nsteam\nsteel\nsteer\nsteering\nstem\n"
    "step\nstereo\nstern\nsticker\nstill\nstillness\nstingy\nstir\n"
    "stock\nstocking\nstomach\nstomachache\nstone\nstool\nstop\n"
    "stoplight\nstore\nstork\nstorm\nstory\nstoryteller\nstove\n"
    "straight\nstrain\nstrainer\nstrait\nstrange\nstranger\nstrategy\n"
    "straw\nstrawberry\nstream\nstreet\nstrength\nstress\nstretch\n"
    "stretcher\nstrict\nstride\nstrike\nstroll\nstroller\nstrong\n"
    "struggle\nstudent\nstudy\nstuff\nstumble\nstupid\nsturdy\nsturgeon\n"
    "subject\nsubmarine\nsubstitute\nsubtraction\nsuburb\nsubway\nsuch\n"
    "sudden\nsugar\nsuggestion\nsuit\nsuitcase\nsuite\nsum\nsummarize\n"
    "summary\nsummer\nsummit\nsun\nsunbeam\nsunflower\nsunrise\nsunset\n"
    "superb\nsuperior\nsupermarket\nsupervise\nsupper\nsupply\nsupport\n"
    "surf\nsurfboard\nsurge\nsurgeon\nsurgery\nsurprised\nsurrender\n"
    "survive\nsuspect\nsuspension\nswallow\nswamp\nswan\nswap\nsweater\n"
    "sweep\nsweet\nswell\nsweltering\nswerve\nswift\nswim\nswimming\n"
    "swing\nswirl\nswitch\nsword\nswordfish\nsyllable\nsyllabus\n"
    "symbiosis\nsympathy\nsymphony\nsymptom\nsynagogue\nsyrup\nsystem\n"
    "table\ntablet\ntackle\ntactic\ntailor\ntake\ntale\ntalent\ntalk\n"
    "tall\ntalon\ntambourine\ntame\ntan\ntangled\ntank\ntap\ntape\n"
    "tardy\ntarget\ntask\ntaste\ntattered\ntavern\ntax\ntaxi\nteacher\n"
    "teal\nteammate\ntease\ntechnician\ntechnique\nteenager\ntelegram\n"
    "telescope\ntelevision\ntell\ntemper\ntemperature\ntemple\ntempo\n"
    "ten\ntent\ntepid\nterm\nterminal\nterminate\nterrace\nterrain\n"
    "terrible\nterrific\nterritory\nterror\ntest\nthan\nthank\nthankful\n"
    "thaw\nthe\ntheater\ntheft\ntheir\nthem\ntheme\nthen\ntheory\n"
    "therapy\nthere\nthermometer\nthese\nthesis\nthey\nthick\nthicket\n"
    "thigh\nthin\nthing\nthings\nthink\nthird\nthirteen\nthirty\n"
    "thistle\nthorn\nthose\nthough\nthought\nthousand\nthread\n"
    "threadbare\nthreat\nthree\nthrifty\nthrilled\nthrive\nthroat\n"
    "throne\nthrough\nthrow\nthud\nthumb\nthump\nthunder\nthus\nthyme\n"
    "tiara\ntick\nticket\ntide\ntidy\ntie\ntiger\ntight\ntile\ntimber\n"
    "time\ntimely\ntimid\ntin\ntint\ntiny\ntiptoe\ntire\ntired\ntissue\n"
    "title\nto\ntoad\ntoast\ntoaster\ntoday\ntoddler\ntoe\ntoken\ntold\n"
    "tolerant\ntoll\ntomato\ntomorrow\ntone\ntongs\ntongue\ntoo\ntook\n"
    "tool\ntooth\ntoothache\ntoothbrush\ntoothpaste\ntopaz\ntopography\n"
    "torch\ntorment\ntorn\ntornado\ntortoise\ntoss\ntotal\ntoucan\n"
    "touch\ntouchdown\ntough\ntour\ntournament\ntow\ntoward\ntowel\n"
    "tower\ntown\ntoy\ntrack\ntractor\ntrade\ntradition\ntraffic\n"
    "tragedy\ntrail\ntrailer\ntrain\ntrainee\ntraining\ntram\n"
    "tranquility\ntransaction\ntranscribe\ntranslate\ntravel\ntreasure\n"
    "treatment\ntreaty\ntree\ntrial\ntriangle\ntribe\ntribute\ntrick\n"
    "trickle\ntricycle\ntrilogy\ntrinket\ntrip\ntripod\ntriumph\ntrivet\n"
    "trivial\ntrolley\ntrombone\ntrophy\ntropic\ntrot\ntrough\ntrousers\n"
    "trout\ntrowel\ntruancy\ntruce\ntruck\ntrudge\ntrue\ntrumpet\ntrunk\n"
    "truth\ntruthful\ntuba\ntuition\ntulip\ntumbler\ntuna\ntune\ntunnel\n"
    "turkey\nturn\nturned\nturtle\ntutor\ntweet\ntwelve\ntwenty\ntwig\n"
    "twilight\ntwist\ntwisted\ntwo\ntype\ntyphoon\ntypical\nukulele\n"
    "umbrella\numpire\nuncle\nunder\nunderbrush\nundergraduate\n"
    "undergrowth\nunderstand\nunfair\nuniform\nunique\nunited\n"
    "universal\nuniverse\nuniversity\nunjust\nunlawful\nunload\nunlock\n"
    "unpack\nunseal\nunsure\nuntil\nunusual\nunwrap\nup\nupload\nupon\n"
    "uprising\nus\nuse\nused\nuseful\nuseless\nusername\nutensil\nutter\n"
    "vacation\nvaccine\nvacuum\nvain\nvalid\nvalley\nvalor\nvaluable\n"
    "value\nvalve\nvan\nvanilla\nvanity\nvariety\nvarnish\nvase\nvast\n"
    "vein\nvelvet\nvendor\nveneer\nventilation\nventure\nverdict\nverse\n"
    "very\nvest\nveteran\nveterinarian\nvictory\nvideo\nview\nvillage\n"
    "vine\nvinegar\nvineyard\nvinyl\nviola\nviolet\nviolin\nvirus\nvisa\n"
    "visitor\nvital\nvitamin\nvocabulary\nvoice\nvolcano\nvolley\n"
    "volume\nvolunteer\nvote\nvoucher\nvow\nvowel\nvoyage\nwage\nwagon\n"
    "wail\nwaist\nwait\nwaiter\nwaitress\nwake\nwalk\nwall\nwallet\n"
    "walnut\nwander\nwant\nwar\nwardrobe\nwarehouse\nwarm\nwarning\n"
    "warranty\nwas\nwash\nwasher\nwasp\nwatch\nwater\nwatercolor\n"
    "waterfall\nwave\nway\nwe\nweak\nwealthy\nweapon\nweather\n"
    "weathervane\nwebsite\nwedding\nweed\nweek\nweep\nweight\nweird\n"
    "welcome\nwell\nwent\nwere\nwet\nwhale\nwharf\nwhat\nwheat\nwheel\n"
    "wheelbarrow\nwheelchair\nwhen\nwhere\nwhich\nwhile\nwhirlpool\n"
    "whisk\nwhisper\nwhistle\nwhite\nwhiteboard\nwho\nwhole\nwhy\nwick\n"
    "wide\nwidow\nwidower\nwidth\nwife\nwild\nwilderness\nwildlife\n"
    "will\nwilling\nwillow\nwilt\nwin\nwind\nwindmill\nwindow\n"
    "windshield\nwing\nwink\nwinter\nwipe\nwiper\nwire\nwisdom\nwise\n"
    "wish\nwith\nwithdrawal\nwither\nwithin\nwithout\nwitness\nwolf\n"
    "wonderful\nwoods\nwool\nword\nwork\nworksheet\nworkshop\nworld\n"
    "worm\nworn\nworried\nworry\nworship\nworth\nworthless\nwould\n"
    "wound\nwrangle\nwrap\nwrapper\nwrath\nwreath\nwreck\nwrench\nwrist\n"
    "write\nwriter\nwrong\nxylophone\nyacht\nyard\nyawn\nyear\nyearn\n"
    "years\nyell\nyellow\nyesterday\nyet\nyodel\nyogurt\nyou\nyoung\n"
    "youngster\nyour\nyouth\nzebra\nzero\nzinc\nzinnia\nzipper\nzoom\n";

}  // namespace

const std::vector<std::string>& common_words() {
  static const std::vector<std::string> words = [] {
    std::vector<std::string> out;
    std::istringstream in(kCommonWords);
    std::string word;
    while (std::getline(in, word)) {
      if (!word.empty()) out.push_back(word);
    }
    return out;
  }();
  return words;
}

}  // namespace genshin::core
