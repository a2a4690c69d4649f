// Seed text the bundled language profiles are built from. Plain everyday
// prose, written for this project; the held-out evaluation sentences in the
// test suite are deliberately not drawn from it.

namespace hsx::langid_seed {

extern const char* const kEnglish;
extern const char* const kGerman;

const char* const kEnglish = R"SEED(
The morning train was late again, and the platform slowly filled with people
checking their phones and looking down the empty track. A cold wind pushed
paper cups across the concrete while the loudspeaker apologized for the delay
and promised that the next service would arrive in a few minutes. Nobody
really believed the announcement, but everyone stayed anyway, because there
was no better way to get into the city before nine.

Cooking a good soup takes more patience than skill. You start with an onion,
a little oil, and a heavy pot, and you let things soften before you add the
stock. Most people rush this part and wonder later why the flavor feels thin.
If you wait, stir now and then, and season at the end instead of the
beginning, the same cheap vegetables turn into something you actually want to
eat on a rainy evening.

Our neighborhood library stays open late on Thursdays. Students spread their
notes across the long tables, an old man reads yesterday's newspaper twice,
and the librarian answers the same question about the printer with remarkable
calm. I go there mostly for the quiet. At home there is always a dish to
wash or a message to answer; between the shelves there is only the soft sound
of pages and the occasional cough.

The match on Saturday was decided in the last ten minutes. The home side had
controlled the ball for most of the game without creating real chances, and
the visitors defended deep and waited. Then a quick pass through the middle,
a clever run from the young striker, and suddenly the whole stadium was on
its feet. The final whistle came too soon for one team and not nearly soon
enough for the other.

When my computer started making a clicking noise, I did what everyone does: I
ignored it. Two weeks later the disk failed on a Monday morning, taking a
folder of photos with it. The lesson cost me a weekend and a little money,
and now a small box in the corner of the room copies everything to a second
drive every night. Backups are boring right up until the moment they are the
most interesting thing you own.

Travel teaches you how little you need. After a week out of a single bag you
stop missing the things you left at home, and you learn that a spare shirt,
comfortable shoes, and a charger will carry you through almost anything. The
best days are usually the unplanned ones, when a wrong turn leads to a small
market, a friendly dog, or a view of the river you would never have found
with a map.

My grandmother kept a garden behind the house, two rows of beans, a patch of
potatoes, and a line of flowers she refused to call useful. She watered them
in the early morning before the heat came, and she could tell from the color
of a leaf what the soil wanted. We mostly watched and carried the buckets.
Years later I still cannot walk past a tomato plant without checking whether
someone has tied it up properly.

The new café on the corner sells coffee that costs twice as much as it
should, and every table is full by ten. People come for the light, I think,
and for the big windows facing the square. You can sit there for an hour
with one cup and nobody bothers you. The owner remembers names, which in
this part of town counts for more than the price of anything on the menu.

Learning to play an instrument as an adult is an exercise in humility. The
first months sound terrible and the progress hides from you, visible only to
people who have not heard you in a while. Ten quiet minutes of practice every
day beat a heroic hour on Sunday. One evening, without warning, a piece that
fought you for weeks simply works, and you play it three times in a row just
to be sure it was not an accident.

Rain had been falling since noon, and the street outside the office turned
into a line of umbrellas. Inside we drank tea and pretended to work while
the meeting moved slowly toward its end. Someone asked whether the report
could wait until tomorrow, and for once the answer was yes. On days like
that the city feels smaller, as if the weather had gathered everyone under
the same low roof and told them to be patient with each other.
)SEED";

const char* const kGerman = R"SEED(
Der Zug am Morgen hatte wieder Verspätung, und der Bahnsteig füllte sich
langsam mit Leuten, die auf ihre Handys schauten und das leere Gleis entlang
blickten. Ein kalter Wind schob Pappbecher über den Beton, während der
Lautsprecher sich für die Verzögerung entschuldigte und versprach, dass der
nächste Zug in wenigen Minuten ankommen würde. Niemand glaubte der Ansage
wirklich, aber alle blieben trotzdem stehen, denn es gab keinen besseren Weg,
vor neun Uhr in die Stadt zu kommen.

Eine gute Suppe zu kochen verlangt mehr Geduld als Können. Man beginnt mit
einer Zwiebel, etwas Öl und einem schweren Topf, und man lässt alles weich
werden, bevor die Brühe dazukommt. Die meisten Menschen überspringen diesen
Teil und wundern sich später, warum der Geschmack so dünn bleibt. Wer wartet,
ab und zu umrührt und erst am Ende würzt, verwandelt dasselbe billige Gemüse
in etwas, das man an einem regnerischen Abend wirklich essen möchte.

Unsere Stadtbücherei hat donnerstags länger geöffnet. Studenten verteilen
ihre Notizen über die langen Tische, ein alter Mann liest die Zeitung von
gestern zweimal, und die Bibliothekarin beantwortet dieselbe Frage zum
Drucker mit bemerkenswerter Ruhe. Ich gehe vor allem wegen der Stille
dorthin. Zu Hause wartet immer ein Teller oder eine Nachricht; zwischen den
Regalen gibt es nur das leise Geräusch der Seiten und gelegentlich ein
Husten.

Das Spiel am Samstag wurde in den letzten zehn Minuten entschieden. Die
Heimmannschaft hatte den Ball fast die ganze Zeit kontrolliert, ohne echte
Chancen zu erspielen, und die Gäste verteidigten tief und warteten geduldig.
Dann ein schneller Pass durch die Mitte, ein kluger Lauf des jungen Stürmers,
und plötzlich stand das ganze Stadion. Der Schlusspfiff kam für die eine
Mannschaft viel zu früh und für die andere längst nicht früh genug.

Als mein Computer anfing, klickende Geräusche zu machen, tat ich, was alle
tun: Ich ignorierte es. Zwei Wochen später fiel die Festplatte an einem
Montagmorgen aus und nahm einen Ordner voller Fotos mit. Die Lektion kostete
mich ein Wochenende und etwas Geld, und jetzt kopiert eine kleine Kiste in
der Ecke des Zimmers jede Nacht alles auf eine zweite Platte. Sicherungen
sind langweilig, bis zu dem Moment, in dem sie das Wichtigste sind, das man
besitzt.

Reisen lehrt einen, wie wenig man braucht. Nach einer Woche aus einer
einzigen Tasche vermisst man die Dinge zu Hause nicht mehr, und man lernt,
dass ein zweites Hemd, bequeme Schuhe und ein Ladegerät durch fast alles
tragen. Die besten Tage sind meistens die ungeplanten, wenn eine falsche
Abzweigung zu einem kleinen Markt führt, zu einem freundlichen Hund oder zu
einem Blick auf den Fluss, den man mit Karte nie gefunden hätte.

Meine Großmutter hatte einen Garten hinter dem Haus, zwei Reihen Bohnen, ein
Stück mit Kartoffeln und eine Reihe Blumen, die sie sich weigerte nützlich zu
nennen. Sie goss am frühen Morgen, bevor die Hitze kam, und sie konnte an der
Farbe eines Blattes erkennen, was der Boden brauchte. Wir schauten meistens
zu und trugen die Eimer. Jahre später kann ich an keiner Tomatenpflanze
vorbeigehen, ohne zu prüfen, ob jemand sie ordentlich angebunden hat.

Das neue Café an der Ecke verkauft Kaffee, der doppelt so viel kostet wie er
sollte, und trotzdem ist ab zehn Uhr jeder Tisch besetzt. Die Leute kommen
wegen des Lichts, glaube ich, und wegen der großen Fenster zum Platz. Man
kann dort eine Stunde mit einer Tasse sitzen, und niemand stört. Der Besitzer
merkt sich Namen, und das zählt in diesem Viertel mehr als jeder Preis auf
der Karte.

Als Erwachsener ein Instrument zu lernen ist eine Übung in Demut. Die ersten
Monate klingen furchtbar, und der Fortschritt versteckt sich; sichtbar ist er
nur für Leute, die einen länger nicht gehört haben. Zehn ruhige Minuten Üben
am Tag schlagen die heldenhafte Stunde am Sonntag. Eines Abends funktioniert
ein Stück, das sich wochenlang gewehrt hat, auf einmal ganz einfach, und man
spielt es dreimal hintereinander, nur um sicherzugehen, dass es kein Zufall
war.

Seit Mittag fiel Regen, und die Straße vor dem Büro verwandelte sich in eine
Reihe von Regenschirmen. Drinnen tranken wir Tee und taten so, als würden wir
arbeiten, während die Besprechung sich langsam ihrem Ende näherte. Jemand
fragte, ob der Bericht bis morgen warten könne, und ausnahmsweise war die
Antwort ja. An solchen Tagen wirkt die Stadt kleiner, als hätte das Wetter
alle unter dasselbe niedrige Dach geholt und ihnen gesagt, geduldig
miteinander zu sein.
)SEED";

}  // namespace hsx::langid_seed
