#include "narrative/postag.hpp"

namespace narrative {

// Most-frequent Penn Treebank tag per word, compiled from common-usage lists.
// Context-free by design: each entry is the tag the word carries most often,
// so ambiguous words ("love", "back", "kind") get their majority reading.
const PosLexicon& builtin_pos_lexicon() {
    static const PosLexicon lexicon = {
        // determiners and quantifiers
        {"the", "DT"}, {"a", "DT"}, {"an", "DT"}, {"this", "DT"}, {"these", "DT"},
        {"those", "DT"}, {"each", "DT"}, {"every", "DT"}, {"some", "DT"}, {"any", "DT"},
        {"no", "DT"}, {"another", "DT"}, {"all", "DT"}, {"both", "DT"}, {"either", "DT"},
        {"neither", "DT"}, {"such", "JJ"}, {"half", "NN"},

        // pronouns
        {"i", "PRP"}, {"you", "PRP"}, {"he", "PRP"}, {"she", "PRP"}, {"it", "PRP"},
        {"we", "PRP"}, {"they", "PRP"}, {"me", "PRP"}, {"him", "PRP"}, {"us", "PRP"},
        {"them", "PRP"}, {"myself", "PRP"}, {"himself", "PRP"}, {"herself", "PRP"},
        {"itself", "PRP"}, {"themselves", "PRP"}, {"yourself", "PRP"}, {"ourselves", "PRP"},
        {"my", "PRP$"}, {"your", "PRP$"}, {"his", "PRP$"}, {"her", "PRP$"}, {"its", "PRP$"},
        {"our", "PRP$"}, {"their", "PRP$"},
        {"someone", "NN"}, {"anyone", "NN"}, {"everyone", "NN"}, {"everybody", "NN"},
        {"somebody", "NN"}, {"nobody", "NN"}, {"something", "NN"}, {"anything", "NN"},
        {"everything", "NN"}, {"nothing", "NN"}, {"one", "CD"}, {"ones", "NNS"},

        // wh-words
        {"who", "WP"}, {"whom", "WP"}, {"whose", "WP$"}, {"which", "WDT"}, {"what", "WP"},
        {"when", "WRB"}, {"where", "WRB"}, {"why", "WRB"}, {"how", "WRB"}, {"whatever", "WDT"},
        {"whoever", "WP"}, {"whenever", "WRB"}, {"wherever", "WRB"},

        // conjunctions
        {"and", "CC"}, {"or", "CC"}, {"but", "CC"}, {"nor", "CC"}, {"plus", "CC"},

        // prepositions and subordinators
        {"of", "IN"}, {"in", "IN"}, {"for", "IN"}, {"on", "IN"}, {"with", "IN"},
        {"at", "IN"}, {"by", "IN"}, {"from", "IN"}, {"as", "IN"}, {"into", "IN"},
        {"about", "IN"}, {"after", "IN"}, {"before", "IN"}, {"between", "IN"},
        {"through", "IN"}, {"during", "IN"}, {"against", "IN"}, {"among", "IN"},
        {"within", "IN"}, {"without", "IN"}, {"under", "IN"}, {"over", "IN"},
        {"until", "IN"}, {"till", "IN"}, {"while", "IN"}, {"because", "IN"}, {"if", "IN"},
        {"than", "IN"}, {"since", "IN"}, {"upon", "IN"}, {"toward", "IN"}, {"towards", "IN"},
        {"despite", "IN"}, {"like", "IN"}, {"unlike", "IN"}, {"near", "IN"}, {"behind", "IN"},
        {"beyond", "IN"}, {"across", "IN"}, {"along", "IN"}, {"around", "IN"},
        {"beside", "IN"}, {"besides", "IN"}, {"beneath", "IN"}, {"above", "IN"},
        {"below", "IN"}, {"inside", "IN"}, {"outside", "IN"}, {"that", "IN"},
        {"whether", "IN"}, {"though", "IN"}, {"although", "IN"}, {"unless", "IN"},
        {"amid", "IN"}, {"onto", "IN"}, {"via", "IN"}, {"per", "IN"}, {"except", "IN"},

        {"to", "TO"},

        // modals
        {"will", "MD"}, {"would", "MD"}, {"can", "MD"}, {"could", "MD"}, {"shall", "MD"},
        {"should", "MD"}, {"may", "MD"}, {"might", "MD"}, {"must", "MD"}, {"cannot", "MD"},

        // be / have / do
        {"am", "VBP"}, {"is", "VBZ"}, {"are", "VBP"}, {"was", "VBD"}, {"were", "VBD"},
        {"be", "VB"}, {"been", "VBN"}, {"being", "VBG"},
        {"have", "VBP"}, {"has", "VBZ"}, {"had", "VBD"}, {"having", "VBG"},
        {"do", "VBP"}, {"does", "VBZ"}, {"did", "VBD"}, {"done", "VBN"}, {"doing", "VBG"},

        // common base-form verbs
        {"go", "VB"}, {"come", "VB"}, {"see", "VB"}, {"make", "VB"}, {"take", "VB"},
        {"get", "VB"}, {"give", "VB"}, {"find", "VB"}, {"know", "VB"}, {"think", "VB"},
        {"tell", "VB"}, {"say", "VB"}, {"ask", "VB"}, {"leave", "VB"}, {"feel", "VB"},
        {"become", "VB"}, {"put", "VB"}, {"let", "VB"}, {"keep", "VB"}, {"begin", "VB"},
        {"seem", "VB"}, {"help", "VB"}, {"show", "VB"}, {"hear", "VB"}, {"run", "VB"},
        {"move", "VB"}, {"live", "VB"}, {"believe", "VB"}, {"bring", "VB"}, {"happen", "VB"},
        {"write", "VB"}, {"sit", "VB"}, {"stand", "VB"}, {"lose", "VB"}, {"meet", "VB"},
        {"pay", "VB"}, {"set", "VB"}, {"learn", "VB"}, {"lead", "VB"}, {"understand", "VB"},
        {"watch", "VB"}, {"follow", "VB"}, {"stop", "VB"}, {"speak", "VB"}, {"read", "VB"},
        {"spend", "VB"}, {"grow", "VB"}, {"open", "VB"}, {"walk", "VB"}, {"win", "VB"},
        {"teach", "VB"}, {"offer", "VB"}, {"remember", "VB"}, {"consider", "VB"},
        {"appear", "VB"}, {"buy", "VB"}, {"serve", "VB"}, {"die", "VB"}, {"send", "VB"},
        {"build", "VB"}, {"stay", "VB"}, {"fall", "VB"}, {"cut", "VB"}, {"reach", "VB"},
        {"kill", "VB"}, {"raise", "VB"}, {"pass", "VB"}, {"sell", "VB"}, {"decide", "VB"},
        {"return", "VB"}, {"explain", "VB"}, {"carry", "VB"}, {"break", "VB"},
        {"receive", "VB"}, {"agree", "VB"}, {"drive", "VB"}, {"marry", "VB"}, {"dance", "VB"},
        {"sing", "VB"}, {"escape", "VB"}, {"refuse", "VB"}, {"forget", "VB"}, {"fight", "VB"},
        {"accept", "VB"}, {"wait", "VB"}, {"search", "VB"}, {"discover", "VB"},
        {"arrive", "VB"}, {"wish", "VB"}, {"try", "VB"}, {"flee", "VB"}, {"hide", "VB"},
        {"save", "VB"}, {"steal", "VB"}, {"throw", "VB"}, {"catch", "VB"}, {"wear", "VB"},
        {"choose", "VB"}, {"fit", "VB"}, {"insist", "VB"}, {"invite", "VB"}, {"promise", "VB"},
        {"warn", "VB"}, {"greet", "VB"}, {"visit", "VB"}, {"recognize", "VB"},

        // irregular pasts and participles
        {"went", "VBD"}, {"said", "VBD"}, {"came", "VBD"}, {"saw", "VBD"}, {"made", "VBD"},
        {"took", "VBD"}, {"got", "VBD"}, {"gave", "VBD"}, {"told", "VBD"}, {"knew", "VBD"},
        {"thought", "VBD"}, {"left", "VBD"}, {"felt", "VBD"}, {"began", "VBD"},
        {"met", "VBD"}, {"ran", "VBD"}, {"sat", "VBD"}, {"stood", "VBD"}, {"held", "VBD"},
        {"brought", "VBD"}, {"kept", "VBD"}, {"became", "VBD"}, {"fell", "VBD"},
        {"wore", "VBD"}, {"spoke", "VBD"}, {"heard", "VBD"}, {"lost", "VBD"},
        {"grew", "VBD"}, {"wrote", "VBD"}, {"broke", "VBD"}, {"found", "VBD"},
        {"sent", "VBD"}, {"built", "VBD"}, {"bought", "VBD"}, {"caught", "VBD"},
        {"taught", "VBD"}, {"fought", "VBD"}, {"sought", "VBD"}, {"led", "VBD"},
        {"shook", "VBD"}, {"slept", "VBD"},
        {"won", "VBD"}, {"paid", "VBD"}, {"sold", "VBD"}, {"drove", "VBD"},
        {"rode", "VBD"}, {"rose", "VBD"}, {"sang", "VBD"}, {"drew", "VBD"}, {"threw", "VBD"},
        {"flew", "VBD"}, {"chose", "VBD"}, {"spent", "VBD"}, {"stole", "VBD"},
        {"forgot", "VBD"}, {"woke", "VBD"}, {"swore", "VBD"}, {"meant", "VBD"},
        {"gone", "VBN"}, {"seen", "VBN"}, {"taken", "VBN"}, {"given", "VBN"},
        {"known", "VBN"}, {"shown", "VBN"}, {"grown", "VBN"}, {"written", "VBN"},
        {"broken", "VBN"}, {"spoken", "VBN"}, {"chosen", "VBN"}, {"forgotten", "VBN"},
        {"born", "VBN"}, {"worn", "VBN"}, {"torn", "VBN"}, {"hidden", "VBN"},
        {"stolen", "VBN"}, {"fallen", "VBN"}, {"risen", "VBN"}, {"driven", "VBN"},
        {"beaten", "VBN"}, {"eaten", "VBN"}, {"thrown", "VBN"}, {"drawn", "VBN"},

        // -s forms that are verbs, not plurals
        {"goes", "VBZ"}, {"comes", "VBZ"}, {"sees", "VBZ"}, {"makes", "VBZ"},
        {"takes", "VBZ"}, {"gets", "VBZ"}, {"gives", "VBZ"}, {"finds", "VBZ"},
        {"knows", "VBZ"}, {"thinks", "VBZ"}, {"tells", "VBZ"}, {"says", "VBZ"},
        {"asks", "VBZ"}, {"leaves", "VBZ"}, {"feels", "VBZ"}, {"becomes", "VBZ"},
        {"puts", "VBZ"}, {"lets", "VBZ"}, {"keeps", "VBZ"}, {"begins", "VBZ"},
        {"seems", "VBZ"}, {"helps", "VBZ"}, {"shows", "VBZ"}, {"hears", "VBZ"},
        {"runs", "VBZ"}, {"moves", "VBZ"}, {"lives", "VBZ"}, {"believes", "VBZ"},
        {"brings", "VBZ"}, {"happens", "VBZ"}, {"writes", "VBZ"}, {"sits", "VBZ"},
        {"stands", "VBZ"}, {"loses", "VBZ"}, {"meets", "VBZ"}, {"pays", "VBZ"},
        {"sets", "VBZ"}, {"learns", "VBZ"}, {"leads", "VBZ"}, {"watches", "VBZ"},
        {"follows", "VBZ"}, {"stops", "VBZ"}, {"speaks", "VBZ"}, {"reads", "VBZ"},
        {"grows", "VBZ"}, {"opens", "VBZ"}, {"walks", "VBZ"}, {"wins", "VBZ"},
        {"offers", "VBZ"}, {"remembers", "VBZ"}, {"appears", "VBZ"}, {"buys", "VBZ"},
        {"serves", "VBZ"}, {"dies", "VBZ"}, {"sends", "VBZ"}, {"builds", "VBZ"},
        {"stays", "VBZ"}, {"falls", "VBZ"}, {"cuts", "VBZ"}, {"reaches", "VBZ"},
        {"kills", "VBZ"}, {"raises", "VBZ"}, {"passes", "VBZ"}, {"sells", "VBZ"},
        {"decides", "VBZ"}, {"returns", "VBZ"}, {"explains", "VBZ"}, {"carries", "VBZ"},
        {"breaks", "VBZ"}, {"receives", "VBZ"}, {"agrees", "VBZ"}, {"drives", "VBZ"},
        {"marries", "VBZ"}, {"dances", "VBZ"}, {"sings", "VBZ"}, {"escapes", "VBZ"},
        {"refuses", "VBZ"}, {"forgets", "VBZ"}, {"fights", "VBZ"}, {"accepts", "VBZ"},
        {"waits", "VBZ"}, {"searches", "VBZ"}, {"discovers", "VBZ"}, {"arrives", "VBZ"},
        {"wishes", "VBZ"}, {"tries", "VBZ"}, {"flees", "VBZ"}, {"hides", "VBZ"},
        {"saves", "VBZ"}, {"steals", "VBZ"}, {"throws", "VBZ"}, {"catches", "VBZ"},
        {"wears", "VBZ"}, {"chooses", "VBZ"}, {"fits", "VBZ"}, {"insists", "VBZ"},
        {"invites", "VBZ"}, {"promises", "VBZ"}, {"warns", "VBZ"}, {"greets", "VBZ"},
        {"visits", "VBZ"}, {"recognizes", "VBZ"}, {"loves", "VBZ"}, {"hates", "VBZ"},
        {"wants", "VBZ"}, {"needs", "VBZ"}, {"calls", "VBZ"}, {"turns", "VBZ"},
        {"looks", "VBZ"}, {"uses", "VBZ"}, {"works", "VBZ"}, {"plays", "VBZ"},
        {"realizes", "VBZ"}, {"announces", "VBZ"}, {"declares", "VBZ"}, {"orders", "VBZ"},
        {"demands", "VBZ"}, {"vows", "VBZ"}, {"confesses", "VBZ"}, {"reveals", "VBZ"},

        // frequent ambiguous stems pinned to their majority reading
        {"love", "NN"}, {"hate", "VB"}, {"want", "VB"}, {"need", "VB"}, {"call", "VB"},
        {"turn", "VB"}, {"look", "VB"}, {"use", "VB"}, {"work", "NN"}, {"play", "VB"},
        {"hope", "VB"}, {"smile", "NN"}, {"dream", "NN"}, {"dress", "NN"},
        {"talk", "VB"}, {"change", "NN"}, {"start", "VB"}, {"end", "NN"}, {"part", "NN"},
        {"place", "NN"}, {"face", "NN"}, {"hand", "NN"}, {"name", "NN"},
        {"back", "RB"}, {"kind", "NN"}, {"mean", "VB"}, {"matter", "NN"}, {"care", "VB"},
        {"rest", "NN"}, {"present", "JJ"}, {"past", "JJ"}, {"order", "NN"},
        {"cause", "NN"}, {"force", "NN"}, {"fear", "NN"}, {"plan", "NN"},
        {"ride", "NN"}, {"answer", "NN"},
        {"question", "NN"}, {"surprise", "NN"},
        {"attempt", "NN"}, {"strike", "VB"},

        // nouns
        {"time", "NN"}, {"day", "NN"}, {"night", "NN"}, {"morning", "NN"},
        {"evening", "NN"}, {"midnight", "NN"}, {"year", "NN"}, {"week", "NN"},
        {"month", "NN"}, {"hour", "NN"}, {"moment", "NN"}, {"man", "NN"}, {"woman", "NN"},
        {"men", "NNS"}, {"women", "NNS"}, {"people", "NNS"}, {"person", "NN"},
        {"child", "NN"}, {"children", "NNS"}, {"girl", "NN"}, {"boy", "NN"},
        {"mother", "NN"}, {"father", "NN"}, {"stepmother", "NN"}, {"stepsister", "NN"},
        {"sister", "NN"}, {"brother", "NN"}, {"daughter", "NN"}, {"son", "NN"},
        {"wife", "NN"}, {"husband", "NN"}, {"family", "NN"}, {"parent", "NN"},
        {"aunt", "NN"}, {"uncle", "NN"}, {"grandmother", "NN"}, {"friend", "NN"},
        {"house", "NN"}, {"room", "NN"}, {"door", "NN"}, {"window", "NN"}, {"floor", "NN"},
        {"kitchen", "NN"}, {"attic", "NN"}, {"garden", "NN"}, {"forest", "NN"},
        {"road", "NN"}, {"way", "NN"}, {"world", "NN"}, {"country", "NN"}, {"city", "NN"},
        {"town", "NN"}, {"village", "NN"}, {"kingdom", "NN"}, {"land", "NN"},
        {"palace", "NN"}, {"castle", "NN"}, {"court", "NN"}, {"throne", "NN"},
        {"crown", "NN"}, {"king", "NN"}, {"queen", "NN"}, {"prince", "NN"},
        {"princess", "NN"}, {"lord", "NN"}, {"lady", "NN"}, {"duke", "NN"},
        {"servant", "NN"}, {"guard", "NN"}, {"merchant", "NN"}, {"soldier", "NN"},
        {"captain", "NN"}, {"master", "NN"}, {"stranger", "NN"}, {"guest", "NN"},
        {"ball", "NN"}, {"wedding", "NN"}, {"feast", "NN"}, {"gown", "NN"}, {"shoe", "NN"},
        {"slipper", "NN"}, {"glass", "NN"}, {"carriage", "NN"}, {"horse", "NN"},
        {"mouse", "NN"}, {"mice", "NNS"}, {"pumpkin", "NN"}, {"fairy", "NN"},
        {"godmother", "NN"}, {"magic", "NN"}, {"spell", "NN"}, {"curse", "NN"},
        {"wand", "NN"}, {"clock", "NN"}, {"stroke", "NN"}, {"heart", "NN"}, {"eye", "NN"},
        {"head", "NN"}, {"hair", "NN"}, {"foot", "NN"}, {"feet", "NNS"}, {"voice", "NN"},
        {"word", "NN"}, {"story", "NN"}, {"tale", "NN"}, {"letter", "NN"}, {"book", "NN"},
        {"music", "NN"}, {"song", "NN"}, {"light", "NN"}, {"fire", "NN"}, {"water", "NN"},
        {"tree", "NN"}, {"flower", "NN"}, {"bird", "NN"}, {"animal", "NN"}, {"food", "NN"},
        {"money", "NN"}, {"gold", "NN"}, {"gift", "NN"}, {"ring", "NN"}, {"thing", "NN"},
        {"life", "NN"}, {"death", "NN"}, {"joy", "NN"}, {"sorrow", "NN"}, {"tear", "NN"},
        {"grief", "NN"}, {"luck", "NN"}, {"fortune", "NN"}, {"success", "NN"},
        {"failure", "NN"}, {"trouble", "NN"}, {"danger", "NN"}, {"secret", "NN"},
        {"truth", "NN"}, {"lie", "NN"}, {"war", "NN"}, {"peace", "NN"}, {"power", "NN"},
        {"beauty", "NN"}, {"grace", "NN"}, {"honor", "NN"}, {"duty", "NN"}, {"law", "NN"},
        {"side", "NN"}, {"middle", "NN"}, {"top", "NN"}, {"bottom", "NN"}, {"front", "NN"},
        {"edge", "NN"}, {"group", "NN"}, {"crowd", "NN"}, {"pair", "NN"}, {"piece", "NN"},
        {"film", "NN"}, {"movie", "NN"}, {"scene", "NN"}, {"school", "NN"}, {"job", "NN"},
        {"case", "NN"}, {"point", "NN"}, {"fact", "NN"}, {"idea", "NN"}, {"reason", "NN"},
        {"chance", "NN"}, {"news", "NN"}, {"police", "NNS"}, {"home", "NN"},

        // adjectives
        {"good", "JJ"}, {"great", "JJ"}, {"old", "JJ"}, {"young", "JJ"}, {"new", "JJ"},
        {"little", "JJ"}, {"big", "JJ"}, {"small", "JJ"}, {"large", "JJ"}, {"long", "JJ"},
        {"short", "JJ"}, {"high", "JJ"}, {"low", "JJ"}, {"beautiful", "JJ"},
        {"handsome", "JJ"}, {"pretty", "JJ"}, {"ugly", "JJ"}, {"happy", "JJ"},
        {"unhappy", "JJ"}, {"sad", "JJ"}, {"glad", "JJ"}, {"sorry", "JJ"},
        {"unfortunate", "JJ"}, {"lucky", "JJ"}, {"poor", "JJ"}, {"rich", "JJ"},
        {"cruel", "JJ"}, {"evil", "JJ"}, {"wicked", "JJ"}, {"gentle", "JJ"},
        {"lovely", "JJ"}, {"charming", "JJ"}, {"true", "JJ"}, {"false", "JJ"},
        {"dear", "JJ"}, {"sweet", "JJ"}, {"bitter", "JJ"}, {"dark", "JJ"},
        {"bright", "JJ"}, {"fair", "JJ"}, {"magical", "JJ"}, {"royal", "JJ"},
        {"grand", "JJ"}, {"noble", "JJ"}, {"brave", "JJ"}, {"strong", "JJ"},
        {"weak", "JJ"}, {"sick", "JJ"}, {"dead", "JJ"}, {"alive", "JJ"}, {"alone", "RB"},
        {"afraid", "JJ"}, {"angry", "JJ"}, {"proud", "JJ"}, {"quiet", "JJ"},
        {"strange", "JJ"}, {"mysterious", "JJ"}, {"own", "JJ"},
        {"other", "JJ"}, {"same", "JJ"}, {"whole", "JJ"}, {"full", "JJ"}, {"empty", "JJ"},
        {"free", "JJ"}, {"real", "JJ"}, {"certain", "JJ"}, {"sure", "JJ"},
        {"right", "JJ"}, {"wrong", "JJ"}, {"late", "JJ"}, {"early", "JJ"}, {"next", "JJ"},
        {"last", "JJ"}, {"first", "JJ"}, {"second", "JJ"}, {"third", "JJ"},
        {"final", "JJ"}, {"many", "JJ"}, {"few", "JJ"}, {"several", "JJ"}, {"much", "JJ"},
        {"more", "JJR"}, {"most", "JJS"}, {"less", "JJR"}, {"least", "JJS"},
        {"better", "JJR"}, {"best", "JJS"}, {"worse", "JJR"}, {"worst", "JJS"},
        {"elder", "JJR"}, {"eldest", "JJS"}, {"younger", "JJR"}, {"youngest", "JJS"},
        {"older", "JJR"}, {"oldest", "JJS"}, {"greater", "JJR"}, {"greatest", "JJS"},
        {"able", "JJ"}, {"possible", "JJ"}, {"important", "JJ"}, {"different", "JJ"},
        {"famous", "JJ"}, {"popular", "JJ"}, {"favorite", "JJ"}, {"perfect", "JJ"},
        {"terrible", "JJ"}, {"horrible", "JJ"}, {"wonderful", "JJ"}, {"splendid", "JJ"},
        {"cold", "JJ"}, {"hot", "JJ"}, {"warm", "JJ"}, {"deep", "JJ"}, {"wide", "JJ"},
        {"narrow", "JJ"}, {"soft", "JJ"}, {"hard", "JJ"}, {"fast", "JJ"}, {"slow", "JJ"},
        {"heavy", "JJ"}, {"simple", "JJ"}, {"single", "JJ"}, {"wet", "JJ"}, {"dry", "JJ"},
        {"pale", "JJ"}, {"black", "JJ"}, {"white", "JJ"}, {"red", "JJ"}, {"green", "JJ"},
        {"blue", "JJ"}, {"gray", "JJ"}, {"golden", "JJ"}, {"silver", "JJ"},
        {"distant", "JJ"}, {"tired", "JJ"}, {"spring", "NN"},

        // adverbs and particles
        {"not", "RB"}, {"n't", "RB"}, {"very", "RB"}, {"too", "RB"}, {"also", "RB"},
        {"just", "RB"}, {"only", "RB"}, {"now", "RB"}, {"then", "RB"}, {"here", "RB"},
        {"there", "EX"}, {"again", "RB"}, {"away", "RB"}, {"still", "RB"}, {"even", "RB"},
        {"never", "RB"}, {"always", "RB"}, {"often", "RB"}, {"sometimes", "RB"},
        {"soon", "RB"}, {"once", "RB"}, {"twice", "RB"}, {"ever", "RB"}, {"almost", "RB"},
        {"already", "RB"}, {"yet", "RB"}, {"quite", "RB"}, {"rather", "RB"},
        {"perhaps", "RB"}, {"maybe", "RB"}, {"together", "RB"}, {"instead", "RB"},
        {"later", "RB"}, {"ago", "RB"}, {"far", "RB"}, {"well", "RB"}, {"so", "RB"},
        {"up", "RB"}, {"down", "RB"}, {"out", "RP"}, {"off", "RP"},
        {"however", "RB"}, {"meanwhile", "RB"}, {"therefore", "RB"}, {"thus", "RB"},
        {"indeed", "RB"}, {"anyway", "RB"}, {"forever", "RB"}, {"everywhere", "RB"},
        {"somewhere", "RB"}, {"nowhere", "RB"}, {"today", "NN"},
        {"tomorrow", "NN"}, {"yesterday", "NN"}, {"tonight", "NN"},

        // numbers
        {"two", "CD"}, {"three", "CD"}, {"four", "CD"}, {"five", "CD"}, {"six", "CD"},
        {"seven", "CD"}, {"eight", "CD"}, {"nine", "CD"}, {"ten", "CD"},
        {"eleven", "CD"}, {"twelve", "CD"}, {"twenty", "CD"}, {"hundred", "CD"},
        {"thousand", "CD"}, {"million", "CD"},

        // interjections and leftovers
        {"yes", "UH"}, {"oh", "UH"}, {"ah", "UH"}, {"please", "UH"}, {"o'clock", "RB"},
    };
    return lexicon;
}

}  // namespace narrative
